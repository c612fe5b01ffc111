#include "monoword/combinatorics.hpp"

#include "monoword/parallel.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace monoword {

char statistic_tag(Statistic which)
{
    return which == Statistic::WeaklyIncreasing ? 'I' : 'D';
}

Statistic parse_statistic(const std::string& tag)
{
    if (tag == "I" || tag == "i")
        return Statistic::WeaklyIncreasing;
    if (tag == "D" || tag == "d")
        return Statistic::StrictlyDecreasing;
    throw std::invalid_argument("statistic must be I or D, got '" + tag + "'");
}

std::string route_name(Route route)
{
    switch (route) {
    case Route::Enumeration: return "enum";
    case Route::Tableaux: return "tableaux";
    case Route::Series: return "series";
    }
    return "?";
}

Word::Word(std::vector<int> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size)
{
    if (alphabet_size_ < 1)
        throw std::invalid_argument("alphabet size must be positive");
    for (int c : letters_)
        if (c < 1 || c > alphabet_size_)
            throw std::invalid_argument("letter " + std::to_string(c) + " outside 1.."
                                        + std::to_string(alphabet_size_));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    std::vector<int> out(static_cast<std::size_t>(first_row()), 0);
    for (int row : parts_)
        for (int c = 0; c < row; ++c)
            ++out[c];
    return Partition(std::move(out));
}

int Partition::hook(int row, int col) const
{
    const int arm = parts_[row] - col - 1;
    int leg = 0;
    for (int r = row + 1; r < length() && parts_[r] > col; ++r)
        ++leg;
    return arm + leg + 1;
}

std::vector<Partition> partitions(int n, int max_length, int max_part)
{
    std::vector<Partition> out;
    if (n < 0 || max_length < 0)
        return out;
    if (max_part < 0)
        max_part = n;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_length)
            return;
        // The remaining parts must fit in the rows still available.
        const int rows_left = max_length - static_cast<int>(current.size());
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            if (static_cast<long>(part) * rows_left < remaining)
                break;
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

namespace {

int weakly_increasing_length(std::span<const int> letters)
{
    std::vector<int> tails;
    for (int c : letters) {
        auto it = std::upper_bound(tails.begin(), tails.end(), c);
        if (it == tails.end())
            tails.push_back(c);
        else
            *it = c;
    }
    return static_cast<int>(tails.size());
}

// Strictly decreasing in w is strictly increasing in -w.
int strictly_decreasing_length(std::span<const int> letters)
{
    std::vector<int> tails;
    for (int c : letters) {
        auto it = std::lower_bound(tails.begin(), tails.end(), -c);
        if (it == tails.end())
            tails.push_back(-c);
        else
            *it = -c;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

int longest_weakly_increasing(const Word& w)
{
    return weakly_increasing_length(w.letters());
}

int longest_strictly_decreasing(const Word& w)
{
    return strictly_decreasing_length(w.letters());
}

TableauPair rsk(const Word& w)
{
    TableauPair out;
    int step = 0;
    for (int letter : w.letters()) {
        ++step;
        int x = letter;
        std::size_t row = 0;
        for (;; ++row) {
            if (row == out.p.size()) {
                out.p.push_back({x});
                out.q.push_back({step});
                break;
            }
            auto& r = out.p[row];
            auto it = std::upper_bound(r.begin(), r.end(), x);
            if (it == r.end()) {
                r.push_back(x);
                out.q[row].push_back(step);
                break;
            }
            std::swap(x, *it);
        }
    }
    std::vector<int> shape;
    shape.reserve(out.p.size());
    for (const auto& r : out.p)
        shape.push_back(static_cast<int>(r.size()));
    out.shape = Partition(std::move(shape));
    return out;
}

BigInt standard_tableaux_count(const Partition& shape)
{
    BigInt hooks = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            hooks *= shape.hook(r, c);
    return factorial(static_cast<unsigned long>(shape.weight())) / hooks;
}

BigInt semistandard_tableaux_count(const Partition& shape, int k)
{
    if (k < 1)
        throw std::invalid_argument("alphabet size must be positive");
    if (shape.length() > k)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            num *= k + c - r;
            den *= shape.hook(r, c);
        }
    return num / den;
}

DistributionTable::DistributionTable(int k, int N, Statistic which, Route route,
                                     std::vector<Rational> cdf)
    : k_(k), N_(N), which_(which), route_(route), cdf_(std::move(cdf))
{
    if (static_cast<int>(cdf_.size()) != N_ + 1)
        throw std::invalid_argument("distribution table needs N+1 entries");
}

Rational DistributionTable::at(int n) const
{
    if (n < 0)
        return 0;
    if (n >= N_)
        return 1;
    return cdf_[static_cast<std::size_t>(n)];
}

namespace {

void check_parameters(int k, int N)
{
    if (k < 1)
        throw std::invalid_argument("alphabet size k must be positive");
    if (N < 0)
        throw std::invalid_argument("word length N must be nonnegative");
}

std::vector<Rational> cumulative(const std::vector<BigInt>& counts, const BigInt& total)
{
    std::vector<Rational> out(counts.size());
    BigInt running = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        running += counts[i];
        out[i] = Rational(running, total);
        out[i].canonicalize();
    }
    return out;
}

}  // namespace

DistributionTable exact_distribution_enumeration(int k, int N, Statistic which, std::uint64_t budget)
{
    check_parameters(k, N);
    std::uint64_t words = 1;
    for (int i = 0; i < N; ++i) {
        if (words > budget / static_cast<std::uint64_t>(k))
            throw BudgetExceeded("enumeration of " + std::to_string(k) + "^" + std::to_string(N)
                                 + " words exceeds the enumeration budget of "
                                 + std::to_string(budget) + " words");
        words *= static_cast<std::uint64_t>(k);
    }
    if (words > budget)
        throw BudgetExceeded("enumeration exceeds the enumeration budget of " + std::to_string(budget)
                             + " words");

    auto stat = which == Statistic::WeaklyIncreasing ? weakly_increasing_length
                                                     : strictly_decreasing_length;
    // Tasks are the possible first letters; each counts its own suffix space.
    const std::size_t tasks = N == 0 ? 1 : static_cast<std::size_t>(k);
    auto partial = parallel_map<std::vector<std::uint64_t>>(tasks, [&](std::size_t task) {
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(N) + 1, 0);
        if (N == 0) {
            hist[0] = 1;
            return hist;
        }
        std::vector<int> letters(static_cast<std::size_t>(N), 1);
        letters[0] = static_cast<int>(task) + 1;
        for (;;) {
            hist[static_cast<std::size_t>(stat(letters))]++;
            int pos = N - 1;
            while (pos >= 1 && letters[pos] == k) {
                letters[pos] = 1;
                --pos;
            }
            if (pos < 1)
                break;
            ++letters[pos];
        }
        return hist;
    });

    std::vector<BigInt> counts(static_cast<std::size_t>(N) + 1, 0);
    for (const auto& hist : partial)
        for (std::size_t i = 0; i < hist.size(); ++i)
            counts[i] += static_cast<unsigned long>(hist[i]);
    BigInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(N));
    return DistributionTable(k, N, which, Route::Enumeration, cumulative(counts, total));
}

DistributionTable distribution_table_via_tableaux(int k, int N, Statistic which, int budget)
{
    check_parameters(k, N);
    if (N > budget)
        throw BudgetExceeded("tableaux route for N=" + std::to_string(N)
                             + " exceeds the partition budget of N <= " + std::to_string(budget));
    std::vector<BigInt> counts(static_cast<std::size_t>(N) + 1, 0);
    const BigInt fact = factorial(static_cast<unsigned long>(N));
    for (const Partition& shape : partitions(N, k)) {
        BigInt hooks = 1;
        BigInt content = 1;
        for (int r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape[r]; ++c) {
                hooks *= shape.hook(r, c);
                content *= k + c - r;
            }
        // d_lambda(k) * f^lambda = content * N! / hooks^2
        BigInt weight = content * fact / (hooks * hooks);
        const int index = which == Statistic::WeaklyIncreasing ? shape.first_row() : shape.length();
        counts[static_cast<std::size_t>(index)] += weight;
    }
    BigInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(N));
    return DistributionTable(k, N, which, Route::Tableaux, cumulative(counts, total));
}

Rational distribution_via_tableaux(int n, int k, int N, Statistic which, int budget)
{
    return distribution_table_via_tableaux(k, N, which, budget).at(n);
}

}  // namespace monoword
