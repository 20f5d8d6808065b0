// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/circuit_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace fermroute {

using nlohmann::json;

static bool has_angle(GateKind k) { return k == GateKind::RZ || k == GateKind::GIVENS || k == GateKind::PHASE; }

std::string circuit_to_json(const Circuit &c, int indent) {
    json j;
    j["version"] = 1;
    j["L"] = c.cols();
    j["rows"] = c.rows();
    j["cols"] = c.cols();
    j["extra_ancilla_columns"] = c.extra_ancilla_columns;
    json layers = json::array();
    for (const auto &layer : c.layers) {
        json out = json::array();
        for (const Gate &g : layer) {
            json e;
            e["g"] = gate_name(g.kind);
            json q = json::array();
            q.push_back({g.a.r, g.a.c});
            if (g.arity() == 2) q.push_back({g.b.r, g.b.c});
            e["q"] = q;
            if (has_angle(g.kind)) e["theta"] = g.theta;
            out.push_back(e);
        }
        layers.push_back(out);
    }
    j["layers"] = layers;
    if (!c.metadata.empty()) j["metadata"] = c.metadata;
    return j.dump(indent);
}

Circuit circuit_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
        if (j.at("version").get<int>() != 1) throw std::invalid_argument("circuit json: unsupported version");
        int cols = j.at("L").get<int>();
        int rows = j.value("rows", cols);
        cols = j.value("cols", cols);
        Circuit c(rows, cols);
        c.extra_ancilla_columns = j.value("extra_ancilla_columns", 0);
        for (const auto &layer : j.at("layers")) {
            std::vector<Gate> out;
            for (const auto &e : layer) {
                Gate g;
                g.kind = gate_kind_from_name(e.at("g").get<std::string>());
                const auto &q = e.at("q");
                if (static_cast<int>(q.size()) != g.arity()) throw std::invalid_argument("circuit json: wrong arity");
                g.a = {q[0][0].get<int>(), q[0][1].get<int>()};
                if (g.arity() == 2) g.b = {q[1][0].get<int>(), q[1][1].get<int>()};
                if (has_angle(g.kind)) g.theta = e.at("theta").get<double>();
                out.push_back(g);
            }
            c.layers.push_back(std::move(out));
        }
        if (j.contains("metadata")) c.metadata = j["metadata"].get<std::map<std::string, std::string>>();
        c.validate();
        return c;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit json: ") + e.what());
    } catch (const std::logic_error &e) {
        if (dynamic_cast<const std::invalid_argument *>(&e)) throw;
        throw std::invalid_argument(std::string("circuit json: ") + e.what());
    }
}

}  // namespace fermroute
