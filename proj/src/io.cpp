#include "cubpart/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubpart {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_instance(const std::string& what)
{
    throw std::runtime_error("malformed instance: " + what);
}

double cost_entry(const json& entry, std::size_t arity)
{
    if (!entry.is_array() || entry.size() != arity + 1)
        bad_instance("each entry must be an array of indices plus a cost");
    for (std::size_t k = 0; k < arity; ++k)
        if (!entry[k].is_number_integer())
            bad_instance("indices must be integers");
    if (!entry[arity].is_number())
        bad_instance("cost must be a number");
    double v = entry[arity].get<double>();
    if (!std::isfinite(v))
        bad_instance("cost must be finite");
    return v;
}

} // namespace

CostFunction read_instance_json(std::istream& in)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        bad_instance(err.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        bad_instance("top-level object with integer field n required");
    const int n = doc["n"].get<int>();
    if (n < 1)
        bad_instance("n must be at least 1");

    CostFunction c(n);
    if (doc.contains("constant")) {
        if (!doc["constant"].is_number())
            bad_instance("constant must be a number");
        c.constant = doc["constant"].get<double>();
        if (!std::isfinite(c.constant))
            bad_instance("constant must be finite");
    }

    std::set<int> seen_pairs;
    if (doc.contains("pairs")) {
        if (!doc["pairs"].is_array())
            bad_instance("pairs must be an array");
        for (const auto& entry : doc["pairs"]) {
            double v = cost_entry(entry, 2);
            int p = entry[0].get<int>(), q = entry[1].get<int>();
            if (p < 0 || q >= n || p >= q)
                bad_instance("pair indices must satisfy 0 <= p < q < n");
            if (!seen_pairs.insert(pair_rank(p, q)).second)
                bad_instance("duplicate pair entry");
            c.pair_costs[pair_rank(p, q)] = v;
        }
    }
    std::set<int> seen_triples;
    if (doc.contains("triples")) {
        if (!doc["triples"].is_array())
            bad_instance("triples must be an array");
        for (const auto& entry : doc["triples"]) {
            double v = cost_entry(entry, 3);
            int p = entry[0].get<int>(), q = entry[1].get<int>(), r = entry[2].get<int>();
            if (p < 0 || r >= n || p >= q || q >= r)
                bad_instance("triple indices must satisfy 0 <= p < q < r < n");
            if (!seen_triples.insert(triple_rank(p, q, r)).second)
                bad_instance("duplicate triple entry");
            c.triple_costs[triple_rank(p, q, r)] = v;
        }
    }
    return c;
}

CostFunction read_instance_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    return read_instance_json(in);
}

void write_instance_json(std::ostream& out, const CostFunction& c)
{
    c.validate();
    ordered_json doc;
    doc["n"] = c.n;
    doc["constant"] = c.constant;
    ordered_json pairs = ordered_json::array();
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p) {
            double v = c.pair_costs[pair_rank(p, q)];
            if (v != 0.0)
                pairs.push_back({p, q, v});
        }
    ordered_json triples = ordered_json::array();
    for (int r = 2; r < c.n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p) {
                double v = c.triple_costs[triple_rank(p, q, r)];
                if (v != 0.0)
                    triples.push_back({p, q, r, v});
            }
    doc["pairs"] = std::move(pairs);
    doc["triples"] = std::move(triples);
    out << doc.dump(2) << '\n';
}

void write_instance_file(const std::string& path, const CostFunction& c)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    write_instance_json(out, c);
}

std::string report_to_json(const RunReport& report)
{
    ordered_json doc;
    doc["n"] = report.n;
    doc["pairs_fixed_pct"] = report.pairs_fixed_pct;
    doc["triples_fixed_pct"] = report.triples_fixed_pct;
    ordered_json per = ordered_json::object();
    for (const auto& [name, count] : report.per_condition)
        per[name] = count;
    doc["per_condition"] = std::move(per);
    doc["elapsed_ms"] = report.elapsed_ms;
    doc["disabled"] = report.disabled;
    return doc.dump(2);
}

void write_points_csv(std::ostream& out, const std::vector<Point>& points,
                      const std::vector<int>& vertex_of)
{
    if (points.size() != vertex_of.size())
        throw std::invalid_argument("points and vertex ids differ in length");
    out << "x,y,vertex_id\n";
    out << std::setprecision(17);
    for (std::size_t k = 0; k < points.size(); ++k)
        out << points[k].x << ',' << points[k].y << ',' << vertex_of[k] << '\n';
}

} // namespace cubpart
