#include "ivq/mst.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ivq {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Edges of the forest path from `from` to `to`, or empty if none.
IndexList forest_path(const MstProblem& graph, const std::vector<bool>& in_forest, std::size_t from,
                      std::size_t to) {
    std::vector<std::vector<std::size_t>> incident(graph.vertices);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        if (!in_forest[e]) continue;
        incident[graph.edges[e].u].push_back(e);
        incident[graph.edges[e].v].push_back(e);
    }
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via(graph.vertices, none);
    std::vector<bool> seen(graph.vertices, false);
    std::vector<std::size_t> queue{from};
    seen[from] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto x = queue[head];
        for (auto e : incident[x]) {
            const auto y = graph.edges[e].u == x ? graph.edges[e].v : graph.edges[e].u;
            if (seen[y]) continue;
            seen[y] = true;
            via[y] = e;
            queue.push_back(y);
        }
    }
    IndexList path;
    if (!seen[to]) return path;
    for (auto x = to; x != from;) {
        const auto e = via[x];
        path.push_back(e);
        x = graph.edges[e].u == x ? graph.edges[e].v : graph.edges[e].u;
    }
    return path;
}

}  // namespace

bool edge_prec(const Rational& x, std::size_t e, const Rational& y, std::size_t f) {
    if (e == f) throw std::invalid_argument("edge_prec compares edge " + std::to_string(e + 1) + " with itself");
    return x < y || (x == y && e < f);
}

bool always_maximal(std::span<const Area> weights, std::span<const std::size_t> cycle, std::size_t e) {
    if (std::find(cycle.begin(), cycle.end(), e) == cycle.end()) {
        throw std::invalid_argument("edge " + std::to_string(e + 1) + " is not on the cycle");
    }
    return std::all_of(cycle.begin(), cycle.end(), [&](std::size_t c) {
        return c == e || edge_prec(weights[c].hi(), c, weights[e].lo(), e);
    });
}

CycleAction mst_witness_or_delete(std::span<const Area> weights, std::span<const std::size_t> cycle) {
    if (cycle.size() < 2) throw std::invalid_argument("a cycle needs at least two edges");
    const auto hi_less = [&](std::size_t a, std::size_t b) { return edge_prec(weights[a].hi(), a, weights[b].hi(), b); };

    std::optional<std::size_t> doomed;
    for (auto e : cycle) {
        if (always_maximal(weights, cycle, e) && (!doomed || hi_less(*doomed, e))) doomed = e;
    }
    if (doomed) return DeleteEdge{*doomed};

    const auto f = *std::max_element(cycle.begin(), cycle.end(), hi_less);
    std::optional<std::size_t> g;
    for (auto c : cycle) {
        if (c != f && edge_prec(weights[f].lo(), f, weights[c].hi(), c) && (!g || c < *g)) g = c;
    }
    if (!g) throw std::logic_error("cycle without an always-maximal edge has no partner for f");
    return WitnessPair{f, *g};
}

void check_graph(const MstProblem& graph) {
    if (graph.vertices == 0) throw std::invalid_argument("graph has no vertices");
    DisjointSets sets(graph.vertices);
    std::size_t components = graph.vertices;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto [u, v] = graph.edges[e];
        if (u >= graph.vertices || v >= graph.vertices) {
            throw std::invalid_argument("edge " + std::to_string(e + 1) + " has an endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("edge " + std::to_string(e + 1) + " is a self-loop");
        if (sets.unite(u, v)) --components;
    }
    if (components != 1) throw std::invalid_argument("graph is disconnected");
}

MstPass mst_pass(const MstProblem& graph, std::span<const Area> weights) {
    if (weights.size() != graph.edges.size()) {
        throw std::invalid_argument("weight count does not match edge count");
    }
    IndexList order = all_indices(weights.size());
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edge_prec(weights[a].lo(), a, weights[b].lo(), b); });

    MstPass pass;
    std::vector<bool> in_forest(weights.size(), false);
    for (auto e : order) {
        const auto [u, v] = graph.edges[e];
        auto cycle = forest_path(graph, in_forest, u, v);
        in_forest[e] = true;
        if (cycle.empty()) continue;
        cycle.push_back(e);
        const auto action = mst_witness_or_delete(weights, cycle);
        if (const auto* pair = std::get_if<WitnessPair>(&action)) {
            pass.witness = *pair;
            return pass;
        }
        in_forest[std::get<DeleteEdge>(action).edge] = false;
        ++pass.answer.red_rule_count;
    }
    for (std::size_t e = 0; e < weights.size(); ++e) {
        if (in_forest[e]) pass.answer.tree.push_back(e);
    }
    pass.certified = true;
    return pass;
}

SolverStrategy make_mst_strategy(const MstProblem& graph) {
    check_graph(graph);
    SolverStrategy s;
    s.name = graph.lex ? "mst-lex" : "mst";
    s.k_bound = 2;
    s.verifier = [graph](std::span<const Area> weights) {
        auto pass = mst_pass(graph, weights);
        return pass.certified ? Verdict::solved(std::move(pass.answer.tree)) : Verdict::unresolved();
    };
    s.witness = [graph](std::span<const Area> weights, std::size_t) {
        const auto pass = mst_pass(graph, weights);
        IndexList w;
        if (pass.certified) return w;
        for (auto e : {pass.witness.f, pass.witness.g}) {
            if (!weights[e].is_point()) w.push_back(e);
        }
        return w;
    };
    return s;
}

MstRun umst_solve(const UncertainInstance& instance, Oracle& oracle, std::size_t budget) {
    const auto* graph = std::get_if<MstProblem>(&instance.problem);
    if (graph == nullptr) throw std::invalid_argument("instance is not a spanning-tree problem");
    MstRun run;
    run.report = solve(instance, oracle, make_mst_strategy(*graph), budget);
    if (run.report.status == Termination::Solved) {
        run.answer = mst_pass(*graph, run.report.final_areas).answer;
    }
    return run;
}

}  // namespace ivq
