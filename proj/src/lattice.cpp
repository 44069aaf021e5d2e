#include "partlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "partlat/counting.hpp"

namespace partlat {

namespace {

std::string normalize(std::string_view name)
{
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

void partitions_at_most(int remaining, int ceiling, int slots, std::vector<int>& current,
                        std::vector<std::vector<int>>& out, std::size_t dim)
{
    if (remaining == 0) {
        std::vector<int> v = current;
        v.resize(dim, 0);
        out.push_back(std::move(v));
        return;
    }
    if (slots == 0)
        return;
    for (int part = std::min(remaining, ceiling); part >= 1; --part) {
        current.push_back(part);
        partitions_at_most(remaining - part, part, slots - 1, current, out, dim);
        current.pop_back();
    }
}

std::vector<int> sorted_desc(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::string bit_label(const std::vector<int>& bits)
{
    std::string s;
    for (int b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

long long binomial_capped(int n, int k, long long cap)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap)
            return cap + 1;
    }
    return c;
}

} // namespace

LatticeVariant parse_lattice_variant(std::string_view name)
{
    const std::string s = normalize(name);
    if (s == "unit_exchange") return LatticeVariant::unit_exchange;
    if (s == "split_merge") return LatticeVariant::split_merge;
    if (s == "subset_swap") return LatticeVariant::subset_swap;
    if (s == "subset_double_swap") return LatticeVariant::subset_double_swap;
    if (s == "hypercube") return LatticeVariant::hypercube;
    throw std::invalid_argument("unknown lattice variant '" + std::string(name) + "'");
}

std::string_view variant_name(LatticeVariant v)
{
    switch (v) {
    case LatticeVariant::unit_exchange: return "unit_exchange";
    case LatticeVariant::split_merge: return "split_merge";
    case LatticeVariant::subset_swap: return "subset_swap";
    case LatticeVariant::subset_double_swap: return "subset_double_swap";
    case LatticeVariant::hypercube: return "hypercube";
    }
    return "unknown";
}

std::size_t OrbitLattice::index_of(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::out_of_range("lattice has no node '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t OrbitLattice::index_of(const Partition& p) const
{
    if (variant_ != LatticeVariant::unit_exchange && variant_ != LatticeVariant::split_merge)
        throw std::invalid_argument("index_of(Partition): lattice nodes are bit strings");
    if (p.nonzero_count() > static_cast<std::size_t>(params_.parts))
        throw std::out_of_range("partition has more parts than the lattice dimension");
    return index_of(p.padded_to(static_cast<std::size_t>(params_.parts)).label());
}

bool OrbitLattice::adjacent(std::size_t a, std::size_t b) const
{
    const auto& n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
}

OrbitLattice build_lattice(LatticeVariant variant, const LatticeParams& params)
{
    OrbitLattice l;
    l.variant_ = variant;
    l.params_ = params;

    const bool partition_variant =
        variant == LatticeVariant::unit_exchange || variant == LatticeVariant::split_merge;
    if (partition_variant) {
        if (params.total < 0 || params.parts < 1)
            throw std::invalid_argument("partition lattice needs total >= 0 and parts >= 1");
        l.params_.bits = l.params_.ones = 0;
        // p_atmost itself overflows long before the guard matters.
        if (params.total > 400 || p_atmost(params.total, params.parts) > static_cast<Integer>(kMaxLatticeNodes))
            throw std::length_error("lattice would exceed " + std::to_string(kMaxLatticeNodes) + " nodes");
        std::vector<int> current;
        partitions_at_most(params.total, params.total, params.parts, current, l.nodes_,
                           static_cast<std::size_t>(params.parts));
        for (const auto& v : l.nodes_)
            l.labels_.push_back(Partition::canonicalize(v, v.size()).label());
    } else {
        if (params.bits < 0 || params.bits > 62)
            throw std::invalid_argument("bit lattice needs 0 <= bits <= 62");
        if (variant != LatticeVariant::hypercube && (params.ones < 0 || params.ones > params.bits))
            throw std::invalid_argument("subset lattice needs 0 <= ones <= bits");
        l.params_.total = l.params_.parts = 0;
        if (variant == LatticeVariant::hypercube)
            l.params_.ones = 0;
        const long long n_nodes = variant == LatticeVariant::hypercube
            ? (params.bits > 20 ? static_cast<long long>(kMaxLatticeNodes) + 1 : (1LL << params.bits))
            : binomial_capped(params.bits, params.ones, static_cast<long long>(kMaxLatticeNodes));
        if (n_nodes > static_cast<long long>(kMaxLatticeNodes))
            throw std::length_error("lattice would exceed " + std::to_string(kMaxLatticeNodes) + " nodes");
        for (long long mask = 0; mask < (1LL << params.bits); ++mask) {
            if (variant != LatticeVariant::hypercube && __builtin_popcountll(mask) != params.ones)
                continue;
            std::vector<int> bits(static_cast<std::size_t>(params.bits));
            for (int i = 0; i < params.bits; ++i)
                bits[static_cast<std::size_t>(i)] = static_cast<int>((mask >> (params.bits - 1 - i)) & 1);
            l.nodes_.push_back(std::move(bits));
        }
        std::sort(l.nodes_.begin(), l.nodes_.end());
        for (const auto& v : l.nodes_)
            l.labels_.push_back(bit_label(v));
    }

    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < l.nodes_.size(); ++i)
        index.emplace(l.nodes_[i], i);

    std::set<OrbitLattice::Edge> edges;
    auto link = [&](std::size_t a, const std::vector<int>& w) {
        auto it = index.find(w);
        if (it == index.end() || it->second == a)
            return;
        edges.insert(std::minmax(a, it->second));
    };

    const std::size_t dim = partition_variant ? static_cast<std::size_t>(params.parts)
                                              : static_cast<std::size_t>(params.bits);
    for (std::size_t a = 0; a < l.nodes_.size(); ++a) {
        const auto& v = l.nodes_[a];
        switch (variant) {
        case LatticeVariant::unit_exchange:
            for (std::size_t i = 0; i < dim; ++i) {
                if (v[i] == 0)
                    continue;
                for (std::size_t j = 0; j < dim; ++j) {
                    if (i == j)
                        continue;
                    std::vector<int> w = v;
                    --w[i];
                    ++w[j];
                    link(a, sorted_desc(std::move(w)));
                }
            }
            break;
        case LatticeVariant::split_merge:
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j) {
                    if (v[i] == 0 || v[j] == 0)
                        continue;
                    std::vector<int> w = v;
                    w[i] += w[j];
                    w[j] = 0;
                    link(a, sorted_desc(std::move(w)));
                }
            break;
        case LatticeVariant::hypercube:
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<int> w = v;
                w[i] ^= 1;
                link(a, w);
            }
            break;
        case LatticeVariant::subset_swap:
        case LatticeVariant::subset_double_swap: {
            std::vector<std::size_t> ones, zeros;
            for (std::size_t i = 0; i < dim; ++i)
                (v[i] ? ones : zeros).push_back(i);
            if (variant == LatticeVariant::subset_swap) {
                for (std::size_t i : ones)
                    for (std::size_t j : zeros) {
                        std::vector<int> w = v;
                        std::swap(w[i], w[j]);
                        link(a, w);
                    }
                break;
            }
            for (std::size_t x = 0; x < ones.size(); ++x)
                for (std::size_t y = x + 1; y < ones.size(); ++y)
                    for (std::size_t s = 0; s < zeros.size(); ++s)
                        for (std::size_t t = s + 1; t < zeros.size(); ++t) {
                            std::vector<int> w = v;
                            w[ones[x]] = w[ones[y]] = 0;
                            w[zeros[s]] = w[zeros[t]] = 1;
                            link(a, w);
                        }
            break;
        }
        }
    }

    l.edges_.assign(edges.begin(), edges.end());
    l.adjacency_.assign(l.nodes_.size(), {});
    for (const auto& [a, b] : l.edges_) {
        l.adjacency_[a].push_back(b);
        l.adjacency_[b].push_back(a);
    }
    for (auto& n : l.adjacency_)
        std::sort(n.begin(), n.end());
    return l;
}

int distance(const OrbitLattice& l, std::size_t a, std::size_t b)
{
    if (a >= l.node_count() || b >= l.node_count())
        throw std::out_of_range("distance: node index out of range");
    std::vector<int> dist(l.node_count(), kUnreachable);
    std::deque<std::size_t> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == b)
            return dist[u];
        for (std::size_t w : l.neighbors(u))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return kUnreachable;
}

int distance(const OrbitLattice& l, std::string_view a, std::string_view b)
{
    return distance(l, l.index_of(a), l.index_of(b));
}

int distance(const OrbitLattice& l, const Partition& a, const Partition& b)
{
    return distance(l, l.index_of(a), l.index_of(b));
}

std::vector<Integer> column_edge_counts(int total)
{
    if (total < 2)
        throw std::invalid_argument("column_edge_counts: total must be >= 2");
    const OrbitLattice l = build_lattice(LatticeVariant::unit_exchange, {.total = total, .parts = total});
    std::vector<Integer> row(static_cast<std::size_t>(total - 1), 0);
    auto nonzero = [&](std::size_t i) {
        const auto& v = l.nodes()[i];
        return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
    };
    for (const auto& [a, b] : l.edges()) {
        const int na = nonzero(a);
        const int nb = nonzero(b);
        if (std::abs(na - nb) == 1)
            ++row[static_cast<std::size_t>(std::min(na, nb) - 1)];
    }
    return row;
}

std::vector<Integer> neighbor_difference_row(int total)
{
    std::vector<Integer> row = column_edge_counts(total);
    if (total - 1 >= 2) {
        const auto previous = column_edge_counts(total - 1);
        for (std::size_t i = 0; i < previous.size(); ++i)
            row[i] -= previous[i];
    }
    return row;
}

std::string export_edges(const OrbitLattice& l)
{
    std::ostringstream os;
    for (const auto& [a, b] : l.edges())
        os << l.labels()[a] << " -- " << l.labels()[b] << '\n';
    return os.str();
}

std::string export_dot(const OrbitLattice& l)
{
    std::ostringstream os;
    os << "graph " << variant_name(l.variant()) << " {\n";
    for (const auto& label : l.labels())
        os << "  \"" << label << "\";\n";
    for (const auto& [a, b] : l.edges())
        os << "  \"" << l.labels()[a] << "\" -- \"" << l.labels()[b] << "\";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const OrbitLattice& l)
{
    nlohmann::ordered_json j;
    j["variant"] = variant_name(l.variant());
    j["params"] = {{"total", l.params().total},
                   {"parts", l.params().parts},
                   {"bits", l.params().bits},
                   {"ones", l.params().ones}};
    j["nodes"] = l.labels();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : l.edges())
        edges.push_back({l.labels()[a], l.labels()[b]});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

} // namespace partlat
