#pragma once

#include <charconv>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ylab/analysis.hpp"
#include "ylab/branching.hpp"
#include "ylab/heuristic.hpp"
#include "ylab/instance.hpp"

namespace ylab {

using json = nlohmann::json;

/// Shortest round-trip decimal form; the one double formatting used in CSV
/// and human-facing output so identical runs emit identical bytes.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// native JSON instance format: {"name": ..., "points": [[x,y],...]}
//                           or {"name": ..., "matrix": [[...],...]}
// ---------------------------------------------------------------------------

inline json instance_to_json(const Instance& inst) {
    json doc;
    doc["name"] = inst.name();
    if (inst.has_coords()) {
        json pts = json::array();
        for (const Point& p : inst.coords()) pts.push_back(json::array({p.x, p.y}));
        doc["points"] = std::move(pts);
    } else {
        json rows = json::array();
        for (int i = 0; i < inst.size(); ++i) {
            json row = json::array();
            for (int j = 0; j < inst.size(); ++j) row.push_back(inst.dist(i, j));
            rows.push_back(std::move(row));
        }
        doc["matrix"] = std::move(rows);
    }
    return doc;
}

inline Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) raise(ErrorKind::ParseError, "instance document must be an object");
    std::string name = doc.value("name", std::string{});
    const bool has_points = doc.contains("points");
    const bool has_matrix = doc.contains("matrix");
    if (has_points == has_matrix) {
        raise(ErrorKind::ParseError, "instance needs exactly one of \"points\" or \"matrix\"");
    }
    try {
        if (has_points) {
            std::vector<Point> pts;
            for (const auto& p : doc.at("points")) {
                if (!p.is_array() || p.size() != 2) {
                    raise(ErrorKind::ParseError, "each point must be [x, y]");
                }
                pts.push_back({p[0].get<double>(), p[1].get<double>()});
            }
            return Instance::from_points(std::move(pts), DistanceConvention::exact, std::move(name));
        }
        std::vector<std::vector<double>> m;
        for (const auto& row : doc.at("matrix")) m.push_back(row.get<std::vector<double>>());
        return Instance::from_matrix(m, std::move(name));
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------
// TSPLIB subset: NAME, TYPE: TSP, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D,
// NODE_COORD_SECTION, EOF. Distances use the rounded EUC_2D convention.
// ---------------------------------------------------------------------------

inline Instance parse_tsplib(std::istream& in) {
    std::string name;
    int dimension = -1;
    bool type_ok = false, weight_ok = false;
    std::vector<Point> pts;
    std::vector<char> filled;

    std::string line;
    bool in_coords = false;
    while (std::getline(in, line)) {
        // strip comments-by-structure: TSPLIB lines are "KEY : value" or data
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        std::size_t start = trimmed.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        trimmed = trimmed.substr(start);
        if (trimmed == "EOF") break;

        if (in_coords) {
            std::istringstream row(trimmed);
            long id;
            double x, y;
            if (!(row >> id >> x >> y)) raise(ErrorKind::ParseError, "bad coord line: " + trimmed);
            if (id < 1 || id > dimension) raise(ErrorKind::ParseError, "coord id out of range: " + trimmed);
            pts[static_cast<std::size_t>(id - 1)] = {x, y};
            filled[static_cast<std::size_t>(id - 1)] = 1;
            continue;
        }

        const std::size_t colon = trimmed.find(':');
        std::string key = colon == std::string::npos ? trimmed : trimmed.substr(0, colon);
        std::string value = colon == std::string::npos ? "" : trimmed.substr(colon + 1);
        auto strip = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        strip(key);
        strip(value);

        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (value != "TSP") raise(ErrorKind::ParseError, "unsupported TYPE: " + value);
            type_ok = true;
        } else if (key == "DIMENSION") {
            dimension = std::stoi(value);
            if (dimension < 3) raise(ErrorKind::ParseError, "DIMENSION must be >= 3");
            pts.assign(static_cast<std::size_t>(dimension), {});
            filled.assign(static_cast<std::size_t>(dimension), 0);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EUC_2D") raise(ErrorKind::ParseError, "unsupported EDGE_WEIGHT_TYPE: " + value);
            weight_ok = true;
        } else if (key == "NODE_COORD_SECTION") {
            if (dimension < 0) raise(ErrorKind::ParseError, "NODE_COORD_SECTION before DIMENSION");
            in_coords = true;
        } else if (key == "COMMENT") {
            // ignored
        } else {
            raise(ErrorKind::ParseError, "unsupported TSPLIB key: " + key);
        }
    }
    if (!type_ok || !weight_ok || dimension < 0) {
        raise(ErrorKind::ParseError, "missing TYPE/EDGE_WEIGHT_TYPE/DIMENSION");
    }
    for (char f : filled) {
        if (!f) raise(ErrorKind::ParseError, "missing node coordinates");
    }
    return Instance::from_points(std::move(pts), DistanceConvention::rounded_euclidean, std::move(name));
}

// ---------------------------------------------------------------------------
// tour files: JSON {"instance_name", "order", "length"} and the TSPLIB
// TOUR_SECTION form (1-based ids, -1 terminator).
// ---------------------------------------------------------------------------

struct TourFile {
    std::string instance_name;
    Tour tour;
    double length = 0.0;  // informative; recomputed on verification
    bool has_length = false;
};

inline json tour_to_json(const TourFile& tf) {
    json doc;
    doc["instance_name"] = tf.instance_name;
    doc["order"] = tf.tour.order;
    doc["length"] = tf.length;
    return doc;
}

inline TourFile tour_from_json(const json& doc) {
    TourFile tf;
    try {
        tf.instance_name = doc.value("instance_name", std::string{});
        tf.tour.order = doc.at("order").get<std::vector<PointId>>();
        if (doc.contains("length")) {
            tf.length = doc.at("length").get<double>();
            tf.has_length = true;
        }
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, e.what());
    }
    return tf;
}

inline TourFile parse_tsplib_tour(std::istream& in) {
    TourFile tf;
    std::string line;
    bool in_tour = false;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        if (!in_tour) {
            std::string head;
            row >> head;
            if (head == "TOUR_SECTION") in_tour = true;
            if (head.rfind("NAME", 0) == 0) {
                const std::size_t colon = line.find(':');
                if (colon != std::string::npos) {
                    std::string v = line.substr(colon + 1);
                    std::size_t s = v.find_first_not_of(" \t");
                    std::size_t e = v.find_last_not_of(" \t\r");
                    if (s != std::string::npos) tf.instance_name = v.substr(s, e - s + 1);
                }
            }
            continue;
        }
        long id;
        while (row >> id) {
            if (id == -1) return tf;
            if (id < 1) raise(ErrorKind::ParseError, "tour ids are 1-based");
            tf.tour.order.push_back(static_cast<PointId>(id - 1));
        }
    }
    if (!in_tour) raise(ErrorKind::ParseError, "missing TOUR_SECTION");
    return tf;
}

inline std::string emit_tsplib_tour(const TourFile& tf) {
    std::ostringstream out;
    out << "NAME : " << tf.instance_name << "\n";
    out << "TYPE : TOUR\n";
    out << "DIMENSION : " << tf.tour.order.size() << "\n";
    out << "TOUR_SECTION\n";
    for (PointId id : tf.tour.order) out << (id + 1) << "\n";
    out << "-1\nEOF\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// run traces and branch reports (versioned JSON)
// ---------------------------------------------------------------------------

inline json trace_to_json(const Instance& inst, const RunTrace& t) {
    json doc;
    doc["format"] = "ylab.trace";
    doc["version"] = 1;
    doc["instance"] = inst.name();
    doc["n"] = inst.size();
    doc["variant"] = to_string(t.variant);
    doc["eps"] = t.eps;
    doc["negative_delta_seen"] = t.negative_delta_seen;

    json pair;
    pair["chosen"] = t.initial_pair.chosen;
    pair["candidates"] = json::array();
    for (const auto& c : t.initial_pair.candidates) {
        pair["candidates"].push_back({{"a", c.a}, {"b", c.b}, {"distance", c.distance}});
    }
    doc["initial_pair"] = std::move(pair);

    json third;
    third["chosen"] = t.initial_third.chosen;
    third["candidates"] = json::array();
    for (const auto& c : t.initial_third.candidates) {
        third["candidates"].push_back({{"point", c.point}, {"gain", c.gain}});
    }
    doc["initial_third"] = std::move(third);

    doc["steps"] = json::array();
    for (const auto& s : t.steps) {
        json step;
        step["chosen"] = s.chosen;
        step["candidates"] = json::array();
        for (const auto& c : s.candidates) {
            step["candidates"].push_back({{"edge_position", c.edge_position},
                                          {"edge", json::array({c.edge.a, c.edge.b})},
                                          {"point", c.point},
                                          {"delta", c.delta}});
        }
        doc["steps"].push_back(std::move(step));
    }
    doc["final"] = {{"order", t.final_tour.order}, {"length", t.final_length}};
    return doc;
}

inline json branch_report_to_json(const BranchReport& r) {
    json doc;
    doc["format"] = "ylab.branch-report";
    doc["version"] = 1;
    doc["nodes_per_depth"] = r.nodes_per_depth;
    doc["total_nodes"] = r.total_nodes;
    doc["leaves"] = r.leaves;
    doc["distinct_final_tours"] = r.distinct_final_tours;
    doc["best_final_length"] = r.best_final_length;
    doc["worst_final_length"] = r.worst_final_length;
    doc["truncated"] = r.truncated;
    doc["dedup_enabled"] = r.dedup_enabled;
    doc["dedup_hits"] = r.dedup_hits;
    return doc;
}

// ---------------------------------------------------------------------------
// loop-rate CSV
// ---------------------------------------------------------------------------

inline std::string experiment_csv_header() {
    return "n,trials,with_crossings,rate,mean_uncross_improvement,seed";
}

inline std::string experiment_csv_row(const LoopRateReport& r) {
    std::ostringstream out;
    out << r.n << ',' << r.trials << ',' << r.with_crossings << ',' << format_double(r.rate)
        << ',' << format_double(r.mean_uncross_improvement) << ',' << r.seed;
    return out.str();
}

// ---------------------------------------------------------------------------
// file helpers with format sniffing: JSON documents start with '{'
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::ParseError, "cannot write " + path);
    out << content;
}

inline bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{';
    }
    return false;
}

inline Instance load_instance(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) {
        json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded()) raise(ErrorKind::ParseError, "invalid JSON in " + path);
        Instance inst = instance_from_json(doc);
        if (inst.name().empty()) inst.set_name(path);
        return inst;
    }
    std::istringstream in(text);
    return parse_tsplib(in);
}

inline TourFile load_tour(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) {
        json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded()) raise(ErrorKind::ParseError, "invalid JSON in " + path);
        return tour_from_json(doc);
    }
    std::istringstream in(text);
    return parse_tsplib_tour(in);
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Writes .tour paths in the TSPLIB tour form, everything else as JSON.
inline void save_tour(const std::string& path, const TourFile& tf) {
    if (ends_with(path, ".tour")) {
        write_file(path, emit_tsplib_tour(tf));
    } else {
        write_file(path, tour_to_json(tf).dump(2) + "\n");
    }
}

}  // namespace ylab
