#pragma once

// Exact ground truth for the word statistics: longest weakly increasing and
// strictly decreasing subsequences, RSK, and the tableau-counting formulas.
// Everything here is exact; no floating point.

#include "monoword/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoword {

// Which monotone statistic a distribution describes.
enum class Statistic {
    WeaklyIncreasing,    // "I"
    StrictlyDecreasing,  // "D"
};

char statistic_tag(Statistic which);
Statistic parse_statistic(const std::string& tag);

enum class Route { Enumeration, Tableaux, Series };

std::string route_name(Route route);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr int kDefaultTableauxBudget = 500;

class Word {
public:
    Word(std::vector<int> letters, int alphabet_size);

    std::span<const int> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int alphabet_size() const { return alphabet_size_; }

private:
    std::vector<int> letters_;
    int alphabet_size_;
};

class Partition {
public:
    Partition() = default;
    // Trailing zero parts are dropped; negative or increasing parts throw.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    Partition conjugate() const;
    // Hook length of cell (row, col), zero-based.
    int hook(int row, int col) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n with at most max_length parts (and parts <= max_part
// when max_part >= 0), in reverse lexicographic order.
std::vector<Partition> partitions(int n, int max_length, int max_part = -1);

using Tableau = std::vector<std::vector<int>>;

struct TableauPair {
    Tableau p;  // semistandard, entries in 1..k
    Tableau q;  // standard, entries 1..N
    Partition shape;
};

int longest_weakly_increasing(const Word& w);
int longest_strictly_decreasing(const Word& w);

TableauPair rsk(const Word& w);

// f^lambda by the hook length formula.
BigInt standard_tableaux_count(const Partition& shape);
// d_lambda(k) by the hook-content formula; zero when length > k.
BigInt semistandard_tableaux_count(const Partition& shape, int k);

// F(n; k, N) for n = 0..N.
class DistributionTable {
public:
    DistributionTable(int k, int N, Statistic which, Route route, std::vector<Rational> cdf);

    int alphabet_size() const { return k_; }
    int word_length() const { return N_; }
    Statistic statistic() const { return which_; }
    Route route() const { return route_; }
    // F(n; k, N); 0 for n < 0, 1 for n >= N.
    Rational at(int n) const;
    std::span<const Rational> values() const { return cdf_; }

private:
    int k_;
    int N_;
    Statistic which_;
    Route route_;
    std::vector<Rational> cdf_;
};

// Visits all k^N words. Refuses when k^N exceeds the budget.
DistributionTable exact_distribution_enumeration(int k, int N, Statistic which,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

// Sums d_lambda(k) f^lambda over shapes with lambda_1 <= n (I) or
// length <= n (D). Refuses when N exceeds the budget.
Rational distribution_via_tableaux(int n, int k, int N, Statistic which,
                                   int budget = kDefaultTableauxBudget);
DistributionTable distribution_table_via_tableaux(int k, int N, Statistic which,
                                                  int budget = kDefaultTableauxBudget);

}  // namespace monoword
