#pragma once

#include "cmgr/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmgr {

// Integer partition, weakly decreasing positive parts. Empty list is the
// empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[static_cast<size_t>(i)] : 0; }
    bool empty() const { return parts.empty(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    Partition transpose() const;
    bool contains(const Partition& o) const;
    bool fits_box(int rows, int cols) const { return length() <= rows && part(0) <= cols; }
    std::string to_string() const;
};

// (point, partition) pairs with pairwise distinct points.
struct MultiPartition {
    std::vector<std::pair<Rational, Partition>> blocks;

    int total_size() const {
        int s = 0;
        for (const auto& [p, lam] : blocks) s += lam.size();
        return s;
    }
    bool operator==(const MultiPartition& o) const { return blocks == o.blocks; }
};

// Hook decomposition along the main diagonal: pairs (n_i, r_i) with
// n_i the hook size and r_i its number of rows, ordered by decreasing r_i.
using FrobeniusForm = std::vector<std::pair<int, int>>;

FrobeniusForm frobenius_form(const Partition& lambda);
// inverse of frobenius_form; validates the row/arm constraints
Partition partition_from_frobenius(const FrobeniusForm& f);

// Multiset of contents (column - row) over the boxes of the diagram, sorted,
// together with the residue generating function sum q^content as
// exponent -> coefficient.
struct ContentsResidue {
    std::vector<int> contents;
    std::map<int, int> residue;
};
ContentsResidue contents_residue(const Partition& lambda);

// s_i = i - lambda_i for all i with s_i < window. Throws when lambda_0 > window.
std::vector<int> pivot_set(const Partition& lambda, int window);

// Complement in the n x n box: lambda_i + result_{n-1-i} = n.
Partition box_complement(const Partition& lambda, int n);

// Number of standard Young tableaux (hook length formula).
long dim_irrep(const Partition& lambda);

std::vector<Partition> partitions_of(int n);

// All multisets of nonempty partitions with total size n, each returned as a
// list sorted descending by size then lexicographically.
std::vector<std::vector<Partition>> partition_multisets_of(int n);

}  // namespace cmgr
