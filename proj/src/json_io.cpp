#include "circlepaint/json_io.hpp"

#include <utility>

#include "circlepaint/errors.hpp"
#include "json.hpp"

namespace circlepaint {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

// Field access with the json library's type errors rewritten as InvalidInput,
// so CLI users see exit code 2 instead of a crash dump.
template <typename T>
T field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + '"');
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

IntervalSystem load_system_json(const std::string& text) {
    const json doc = parse(text);
    const json arr = field<json>(doc, "intervals");
    if (!arr.is_array()) {
        throw InvalidInput("\"intervals\" must be an array");
    }
    std::vector<RawInterval> raw;
    raw.reserve(arr.size());
    for (const json& item : arr) {
        raw.push_back({field<std::string>(item, "id"),
                       field<double>(item, "left"),
                       field<double>(item, "right")});
    }
    return canonicalize(raw);
}

std::string save_system_json(const IntervalSystem& sys) {
    json arr = json::array();
    for (const Interval& iv : sys.intervals()) {
        arr.push_back({{"id", iv.id}, {"left", iv.left}, {"right", iv.right}});
    }
    return json{{"intervals", std::move(arr)}}.dump(2);
}

ChordDiagram load_diagram_json(const std::string& text) {
    const json doc = parse(text);
    ChordDiagram d;
    d.n = field<int>(doc, "n");
    const json arr = field<json>(doc, "chords");
    if (!arr.is_array()) {
        throw InvalidInput("\"chords\" must be an array");
    }
    for (const json& item : arr) {
        Chord c;
        c.a = point_index(field<std::string>(item, "a"), d.n);
        c.b = point_index(field<std::string>(item, "b"), d.n);
        c.mult = item.contains("mult") ? field<int>(item, "mult") : 1;
        if (c.mult < 1) {
            throw InvalidInput("chord multiplicity must be >= 1");
        }
        d.chords.push_back(c);
    }
    return d;
}

std::string save_diagram_json(const ChordDiagram& d) {
    json arr = json::array();
    for (const Chord& c : d.chords) {
        arr.push_back({{"a", point_label(c.a)},
                       {"b", point_label(c.b)},
                       {"mult", c.mult}});
    }
    return json{{"n", d.n}, {"chords", std::move(arr)}}.dump(2);
}

std::string colouring_json(const IntervalSystem& sys,
                           const std::vector<int>& colours,
                           const std::vector<GapPosition>& pillar_order,
                           const std::vector<std::vector<int>>& colour_sets,
                           int chi_used, bool complete,
                           const SolveStats* stats) {
    json colour_map = json::object();
    for (int i = 0; i < sys.size(); ++i) {
        colour_map[sys[i].id] = colours[static_cast<size_t>(i)];
    }
    json sets = json::array();
    for (size_t k = 0; k < colour_sets.size(); ++k) {
        sets.push_back({{"gap", pillar_order[k]}, {"colors", colour_sets[k]}});
    }
    json doc{{"colors", std::move(colour_map)},
             {"colour_sets", std::move(sets)},
             {"pillar_order", pillar_order},
             {"chi_used", chi_used},
             {"complete", complete}};
    if (stats != nullptr) {
        doc["stats"] = {{"omega", stats->omega},
                        {"colors_used", stats->colours_used},
                        {"bound", stats->bound},
                        {"pillar_count", stats->pillar_count},
                        {"iteration_count", stats->iteration_count},
                        {"max_arch_degree_seen", stats->max_arch_degree_seen},
                        {"assertions_checked", stats->assertions_checked}};
    }
    return doc.dump(2);
}

std::string colouring_json(const IntervalSystem& sys,
                           const ColouringResult& result, bool with_stats) {
    return colouring_json(sys, result.colours, result.pillar_order,
                          result.colour_sets, result.chi_used, result.complete,
                          with_stats ? &result.stats : nullptr);
}

std::vector<int> load_colours_json(const IntervalSystem& sys,
                                   const std::string& text) {
    const json doc = parse(text);
    if (!doc.is_object()) {
        throw InvalidInput("colour document must be a JSON object");
    }
    const json& map = doc.contains("colors") ? doc.at("colors") : doc;
    if (!map.is_object()) {
        throw InvalidInput("\"colors\" must be an object of id -> colour");
    }
    std::vector<int> colours(static_cast<size_t>(sys.size()), 0);
    for (const auto& [id, value] : map.items()) {
        const int idx = sys.index_of(id);
        if (idx < 0) {
            throw InvalidInput("colour map names unknown interval \"" + id +
                               '"');
        }
        if (!value.is_number_integer()) {
            throw InvalidInput("colour of \"" + id + "\" must be an integer");
        }
        colours[static_cast<size_t>(idx)] = value.get<int>();
    }
    return colours;
}

std::string report_json(const LowerBoundReport& rep) {
    return json{{"n", rep.n},
                {"omega", rep.omega},
                {"chord_count", rep.chord_count},
                {"size_lower_bound", rep.size_lower_bound},
                {"clique_checked", rep.clique_checked},
                {"stable_checked", rep.stable_checked},
                {"chi_lower", {{"num", rep.chi_lower.num},
                               {"den", rep.chi_lower.den}}}}
        .dump(2);
}

}  // namespace circlepaint
