#include "partlat/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace partlat::oracle {

namespace {

void require_nonnegative(const std::optional<int>& v, const char* name)
{
    if (v && *v < 0)
        throw std::invalid_argument(std::string("constraint ") + name + " must be >= 0");
}

struct Descent {
    const ConstraintRecord& c;
    int part_cap;
    int count_cap;
    int lowest;
    std::vector<int> current;
    std::vector<Partition> out;

    void run(int remaining, int ceiling)
    {
        if (remaining == 0) {
            Partition p = Partition::canonicalize(current);
            if (satisfies(p, c))
                out.push_back(std::move(p));
            return;
        }
        if (static_cast<int>(current.size()) >= count_cap)
            return;
        for (int part = std::min(remaining, ceiling); part >= lowest; --part) {
            current.push_back(part);
            run(remaining - part, part);
            current.pop_back();
        }
    }
};

} // namespace

void ConstraintRecord::validate() const
{
    if (total < 0)
        throw std::invalid_argument("constraint total must be >= 0");
    if (total > kMaxTotal)
        throw std::out_of_range("oracle total " + std::to_string(total) + " exceeds the guard "
                                + std::to_string(kMaxTotal));
    if (max_parts && exact_parts)
        throw std::invalid_argument("at most one of max_parts / exact_parts may be set");
    if (max_part && exact_max_part)
        throw std::invalid_argument("at most one of max_part / exact_max_part may be set");
    require_nonnegative(max_part, "max_part");
    require_nonnegative(max_parts, "max_parts");
    require_nonnegative(exact_parts, "exact_parts");
    require_nonnegative(exact_max_part, "exact_max_part");
    require_nonnegative(min_part, "min_part");
    require_nonnegative(unit_count, "unit_count");
    require_nonnegative(layer, "layer");
    require_nonnegative(hook_frame, "hook_frame");
}

bool satisfies(const Partition& p, const ConstraintRecord& c)
{
    if (p.sum() != c.total)
        return false;
    const int parts = static_cast<int>(p.nonzero_count());
    const auto nz = p.nonzero_parts();
    if (c.max_part && p.largest() > *c.max_part)
        return false;
    if (c.exact_max_part && p.largest() != *c.exact_max_part)
        return false;
    if (c.max_parts && parts > *c.max_parts)
        return false;
    if (c.exact_parts && parts != *c.exact_parts)
        return false;
    if (c.min_part && !nz.empty() && nz.back() < *c.min_part)
        return false;
    if (c.unit_count && static_cast<int>(std::count(nz.begin(), nz.end(), 1)) != *c.unit_count)
        return false;
    if (c.layer && partlat::layer(p) != *c.layer)
        return false;
    if (c.hook_frame && (p.empty() || hook_frame_size(p) != *c.hook_frame))
        return false;

    auto odd = std::count_if(nz.begin(), nz.end(), [](int x) { return x % 2 != 0; });
    auto even = static_cast<long>(nz.size()) - odd;
    switch (c.parity) {
    case Parity::none: return true;
    case Parity::all_odd: return even == 0;
    case Parity::all_even: return odd == 0;
    case Parity::mixed: return odd > 0 && even > 0;
    case Parity::distinct: return std::set<int>(nz.begin(), nz.end()).size() == nz.size();
    }
    return true;
}

std::vector<Partition> enumerate(const ConstraintRecord& c)
{
    c.validate();
    int part_cap = c.total;
    if (c.max_part)
        part_cap = std::min(part_cap, *c.max_part);
    if (c.exact_max_part)
        part_cap = std::min(part_cap, *c.exact_max_part);
    int count_cap = c.total;
    if (c.max_parts)
        count_cap = std::min(count_cap, *c.max_parts);
    if (c.exact_parts)
        count_cap = std::min(count_cap, *c.exact_parts);
    int lowest = std::max(1, c.min_part.value_or(1));

    Descent d{c, part_cap, count_cap, lowest, {}, {}};
    d.run(c.total, part_cap);
    return std::move(d.out);
}

Integer count(const ConstraintRecord& c)
{
    return static_cast<Integer>(enumerate(c).size());
}

Classifier parse_classifier(std::string_view name)
{
    if (name == "exact_parts") return Classifier::exact_parts;
    if (name == "largest_part") return Classifier::largest_part;
    if (name == "unit_count") return Classifier::unit_count;
    if (name == "layer") return Classifier::layer;
    if (name == "hook_frame") return Classifier::hook_frame;
    if (name == "parity_class") return Classifier::parity_class;
    throw std::invalid_argument("unknown classifier '" + std::string(name) + "'");
}

std::map<int, Integer> classify(const ConstraintRecord& c, Classifier key)
{
    std::map<int, Integer> buckets;
    for (const Partition& p : enumerate(c)) {
        const auto nz = p.nonzero_parts();
        int k = 0;
        switch (key) {
        case Classifier::exact_parts: k = static_cast<int>(nz.size()); break;
        case Classifier::largest_part: k = p.largest(); break;
        case Classifier::unit_count: k = static_cast<int>(std::count(nz.begin(), nz.end(), 1)); break;
        case Classifier::layer: k = partlat::layer(p); break;
        case Classifier::hook_frame: k = p.empty() ? 0 : hook_frame_size(p); break;
        case Classifier::parity_class: {
            auto odd = std::count_if(nz.begin(), nz.end(), [](int x) { return x % 2 != 0; });
            if (odd == static_cast<long>(nz.size()) && !nz.empty())
                k = kParityOdd;
            else if (odd == 0)
                k = kParityEven;
            else
                k = kParityMixed;
            break;
        }
        }
        ++buckets[k];
    }
    if (!buckets.empty() && key != Classifier::parity_class) {
        for (int k = buckets.begin()->first; k <= buckets.rbegin()->first; ++k)
            buckets.try_emplace(k, 0);
    }
    return buckets;
}

} // namespace partlat::oracle
