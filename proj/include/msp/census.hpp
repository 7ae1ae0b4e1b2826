#pragma once

// Integer partitions and the genus-g census of Dold classes they induce.

#include "msp/arith.hpp"

#include <map>
#include <optional>
#include <vector>

namespace msp {

/// A partition of total() as multiplicities part -> count (counts > 0).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::map<Period, unsigned> multiplicities);
    /// From a list of parts in any order.
    static Partition from_parts(const std::vector<Period>& parts);

    const std::map<Period, unsigned>& multiplicities() const { return mult_; }
    unsigned multiplicity(Period k) const;
    Period total() const;
    /// Parts in decreasing order.
    std::vector<Period> parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::map<Period, unsigned> mult_;
};

/// Exact P(N) by dynamic programming over part sizes; P(0) = 1.
BigInt partition_count(Period n);

/// All partitions of N in decreasing lexicographic order of their part lists.
/// Restartable: reset() rewinds to the first partition.
class PartitionStream {
public:
    explicit PartitionStream(Period n);
    /// The next partition, or nullopt when exhausted.
    std::optional<Partition> next();
    void reset();

private:
    Period n_;
    std::vector<Period> parts_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<Partition> enumerate_partitions(Period n);

/// (1 / (4 N sqrt 3)) exp(pi sqrt(2N/3)).
double hardy_ramanujan_estimate(Period n);

/// a_n = -2 p_n (n != 1), a_1 = -2 (p_1 - 1).
DoldClass partition_to_dold_orientable(const Partition& p);

/// a_n = -p_n (n != 1), a_1 = 2 - p_1.
DoldClass partition_to_dold_nonorientable(const Partition& p);

enum class Correspondence { Orientable, NonOrientable };

struct CensusOptions {
    bool list_classes = false;
    Correspondence correspondence = Correspondence::Orientable;
    /// Maximum number of listed classes; nullopt lists all.
    std::optional<std::size_t> limit;
};

struct CensusEntry {
    Partition partition;
    DoldClass dold;
};

struct CensusReport {
    Period genus;
    BigInt exact_count;
    double hr_estimate;
    double ratio;
    std::optional<Correspondence> correspondence;
    std::vector<CensusEntry> classes;
};

/// P(g) is a lower bound on the number of conjugacy classes of mapping
/// classes of genus-g surfaces containing Morse-Smale diffeomorphisms.
CensusReport census(Period genus, const CensusOptions& options = {});

}  // namespace msp
