#include "msp/census.hpp"

#include "msp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace msp {

Partition::Partition(std::map<Period, unsigned> multiplicities) : mult_(std::move(multiplicities))
{
    std::erase_if(mult_, [](const auto& kv) { return kv.second == 0; });
    if (mult_.count(0)) throw InvalidArgument("partition parts must be positive");
}

Partition Partition::from_parts(const std::vector<Period>& parts)
{
    std::map<Period, unsigned> m;
    for (Period k : parts) ++m[k];
    return Partition(std::move(m));
}

unsigned Partition::multiplicity(Period k) const
{
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
}

Period Partition::total() const
{
    Period t = 0;
    for (const auto& [k, c] : mult_) t += k * c;
    return t;
}

std::vector<Period> Partition::parts() const
{
    std::vector<Period> out;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
}

BigInt partition_count(Period n)
{
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (Period part = 1; part <= n; ++part)
        for (Period m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

PartitionStream::PartitionStream(Period n) : n_(n)
{
    if (n == 0) throw InvalidArgument("partitions are enumerated for N >= 1");
}

void PartitionStream::reset()
{
    parts_.clear();
    done_ = false;
    started_ = false;
}

std::optional<Partition> PartitionStream::next()
{
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        parts_ = {n_};
        return Partition::from_parts(parts_);
    }
    // strip trailing ones, decrement the last part > 1, refill greedily
    Period ones = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++ones;
    }
    if (parts_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    const Period k = --parts_.back();
    Period rest = ones + 1;
    while (rest > 0) {
        const Period take = std::min(k, rest);
        parts_.push_back(take);
        rest -= take;
    }
    return Partition::from_parts(parts_);
}

std::vector<Partition> enumerate_partitions(Period n)
{
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

double hardy_ramanujan_estimate(Period n)
{
    if (n == 0) throw InvalidArgument("Hardy-Ramanujan estimate needs N >= 1");
    const double x = static_cast<double>(n);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

DoldClass partition_to_dold_orientable(const Partition& p)
{
    DoldClass d;
    for (const auto& [k, c] : p.multiplicities())
        if (k != 1) d.set(k, BigInt(-2) * c);
    d.set(1, BigInt(-2) * (static_cast<long>(p.multiplicity(1)) - 1));
    return d;
}

DoldClass partition_to_dold_nonorientable(const Partition& p)
{
    DoldClass d;
    for (const auto& [k, c] : p.multiplicities())
        if (k != 1) d.set(k, -BigInt(c));
    d.set(1, BigInt(2 - static_cast<long>(p.multiplicity(1))));
    return d;
}

CensusReport census(Period genus, const CensusOptions& options)
{
    if (genus == 0) throw InvalidArgument("census needs genus >= 1");
    CensusReport report;
    report.genus = genus;
    report.exact_count = partition_count(genus);
    report.hr_estimate = hardy_ramanujan_estimate(genus);
    report.ratio = report.hr_estimate / report.exact_count.get_d();
    if (options.list_classes) {
        report.correspondence = options.correspondence;
        PartitionStream stream(genus);
        while (auto p = stream.next()) {
            if (options.limit && report.classes.size() >= *options.limit) break;
            DoldClass d = options.correspondence == Correspondence::Orientable
                              ? partition_to_dold_orientable(*p)
                              : partition_to_dold_nonorientable(*p);
            report.classes.push_back({std::move(*p), std::move(d)});
        }
    }
    return report;
}

}  // namespace msp
