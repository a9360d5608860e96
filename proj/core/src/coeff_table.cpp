#include "sigma/coeff_table.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sigma/checkpoint.hpp"

namespace sigma {

namespace {

const mpz_class zero_value{0};

// Keeps 2*max_i + 3*max_j and the recursion factors comfortably inside
// unsigned long; anything near this limit is out of memory reach anyway.
constexpr long max_bound = 100000;

}  // namespace

CoeffTable::CoeffTable(long max_i, long max_j) : max_i_(max_i), max_j_(max_j) {
    if (max_i < 0 || max_j < 0)
        throw std::invalid_argument("rectangle bounds must be non-negative");
    if (max_i > max_bound || max_j > max_bound)
        throw std::invalid_argument("rectangle bounds exceed supported range");
    weight_cap_ = 2 * max_i + 3 * max_j;

    const long rows = weight_cap_ / 2;  // largest i with 2i <= cap
    row_offset_.resize(static_cast<std::size_t>(rows) + 2);
    std::size_t total = 0;
    for (long i = 0; i <= rows; ++i) {
        row_offset_[static_cast<std::size_t>(i)] = total;
        total += static_cast<std::size_t>((weight_cap_ - 2 * i) / 3) + 1;
    }
    row_offset_[static_cast<std::size_t>(rows) + 1] = total;
    values_.resize(total);
    present_.assign(total, 0);
}

bool CoeffTable::in_working_set(Index idx) const {
    return idx.i >= 0 && idx.j >= 0 && weight(idx) <= weight_cap_;
}

std::size_t CoeffTable::slot(Index idx) const {
    return row_offset_[static_cast<std::size_t>(idx.i)] +
           static_cast<std::size_t>(idx.j);
}

bool CoeffTable::contains(Index idx) const {
    return in_working_set(idx) && present_[slot(idx)] != 0;
}

const mpz_class& CoeffTable::coefficient(Index idx) const {
    if (idx.i < 0 || idx.j < 0) return zero_value;
    if (!in_working_set(idx) || !present_[slot(idx)])
        throw NotComputed(idx.i, idx.j);
    return values_[slot(idx)];
}

void CoeffTable::set(Index idx, mpz_class value) {
    if (!in_working_set(idx))
        throw std::invalid_argument("index outside the working set");
    const std::size_t k = slot(idx);
    values_[k] = std::move(value);
    present_[k] = 1;
}

std::vector<Index> CoeffTable::diagonal(long s) const {
    std::vector<Index> result;
    if (s < 0 || s > weight_cap_) return result;
    long j = s / 3;
    if ((j & 1L) != (s & 1L)) --j;  // 2i + 3j = s forces j = s (mod 2)
    for (; j >= 0; j -= 2) result.push_back({(s - 3 * j) / 2, j});
    return result;
}

long CoeffTable::completed_weight() const {
    for (long s = 0; s <= weight_cap_; ++s)
        for (Index idx : diagonal(s))
            if (!present_[slot(idx)]) return s - 1;
    return weight_cap_;
}

std::size_t CoeffTable::size() const {
    return static_cast<std::size_t>(
        std::count(present_.begin(), present_.end(), 1));
}

void CoeffTable::for_each(
    const std::function<void(Index, const mpz_class&)>& fn) const {
    for (long s = 0; s <= weight_cap_; ++s)
        for (Index idx : diagonal(s))
            if (present_[slot(idx)]) fn(idx, values_[slot(idx)]);
}

bool operator==(const CoeffTable& a, const CoeffTable& b) {
    if (a.max_i_ != b.max_i_ || a.max_j_ != b.max_j_) return false;
    if (a.present_ != b.present_) return false;
    for (std::size_t k = 0; k < a.values_.size(); ++k)
        if (a.present_[k] && a.values_[k] != b.values_[k]) return false;
    return true;
}

namespace {

// One recursion step in scaled integer form. Dependencies sit on the two
// previous diagonals, which are fully published before this runs.
mpz_class recursion_value(const CoeffTable& table, Index idx) {
    const long i = idx.i;
    const long j = idx.j;
    mpz_class r(0);
    if (j >= 1) {
        const mpz_class& a = table.coefficient({i + 1, j - 1});
        mpz_addmul_ui(r.get_mpz_t(), a.get_mpz_t(),
                      static_cast<unsigned long>(9 * (i + 1)));
    }
    if (i >= 2) {
        const mpz_class& a = table.coefficient({i - 2, j + 1});
        mpz_addmul_ui(r.get_mpz_t(), a.get_mpz_t(),
                      static_cast<unsigned long>(16 * (j + 1)));
    }
    if (i >= 1) {
        const mpz_class& a = table.coefficient({i - 1, j});
        const unsigned long factor =
            static_cast<unsigned long>(4 * i + 6 * j - 1) *
            static_cast<unsigned long>(2 * i + 3 * j - 1);
        mpz_submul_ui(r.get_mpz_t(), a.get_mpz_t(), factor);
    }
    if (!mpz_divisible_ui_p(r.get_mpz_t(), 3)) throw DivisibilityViolation(i, j);
    mpz_class result;
    mpz_divexact_ui(result.get_mpz_t(), r.get_mpz_t(), 3);
    return result;
}

// Computes (or, for entries already present after a resume, re-derives and
// cross-checks) one index.
void process_entry(CoeffTable& table, Index idx, bool resumed) {
    mpz_class value = recursion_value(table, idx);
    if (resumed && table.contains(idx)) {
        if (value != table.coefficient(idx))
            throw CheckpointMismatch(
                "stored entry (" + std::to_string(idx.i) + ", " +
                std::to_string(idx.j) + ") disagrees with recomputation");
    } else {
        table.set(idx, std::move(value));
    }
}

// Persistent crew computing strided slices of one diagonal per round, the
// calling thread included. Two barriers per round: the first publishes the
// work assignment, the second publishes the finished diagonal. Workers only
// read entries of earlier diagonals and write disjoint slots of the current
// one, so rounds need no further synchronization.
class WavefrontCrew {
public:
    WavefrontCrew(CoeffTable& table, unsigned workers, bool resumed)
        : table_(table),
          resumed_(resumed),
          stride_(workers),
          start_(static_cast<std::ptrdiff_t>(workers)),
          finish_(static_cast<std::ptrdiff_t>(workers)),
          errors_(workers) {
        threads_.reserve(workers - 1);
        for (unsigned t = 1; t < workers; ++t)
            threads_.emplace_back([this, t] { worker_loop(t); });
    }

    WavefrontCrew(const WavefrontCrew&) = delete;
    WavefrontCrew& operator=(const WavefrontCrew&) = delete;

    ~WavefrontCrew() {
        stop_.store(true);
        start_.arrive_and_wait();
        for (auto& thread : threads_) thread.join();
    }

    void process(const std::vector<Index>& indices) {
        // A barrier round costs tens of microseconds; diagonals below this
        // size are cheaper to compute inline. Entry values and slots are the
        // same either way, so results stay independent of the worker count.
        if (threads_.empty() || indices.size() < 16) {
            for (Index idx : indices) process_entry(table_, idx, resumed_);
            return;
        }
        work_ = &indices;
        start_.arrive_and_wait();
        run_slice(0);
        finish_.arrive_and_wait();
        for (auto& error : errors_) {
            if (error) {
                const std::exception_ptr first = error;
                for (auto& e : errors_) e = nullptr;
                std::rethrow_exception(first);
            }
        }
    }

private:
    void worker_loop(unsigned t) {
        while (true) {
            start_.arrive_and_wait();
            if (stop_.load()) return;
            run_slice(t);
            finish_.arrive_and_wait();
        }
    }

    void run_slice(unsigned t) {
        try {
            const std::vector<Index>& indices = *work_;
            for (std::size_t k = t; k < indices.size(); k += stride_)
                process_entry(table_, indices[k], resumed_);
        } catch (...) {
            errors_[t] = std::current_exception();
        }
    }

    CoeffTable& table_;
    const bool resumed_;
    const unsigned stride_;
    const std::vector<Index>* work_ = nullptr;
    std::atomic<bool> stop_{false};
    std::barrier<> start_;
    std::barrier<> finish_;
    std::vector<std::exception_ptr> errors_;
    std::vector<std::thread> threads_;
};

CoeffTable run_engine(CoeffTable table, unsigned workers, bool resumed) {
    if (workers == 0)
        throw std::invalid_argument("workers must be positive");

    if (!table.contains({0, 0})) table.set({0, 0}, 1);

    const long start = std::max(table.completed_weight() + 1, 1L);
    {
        WavefrontCrew crew(table, workers, resumed);
        for (long s = start; s <= table.weight_cap(); ++s)
            crew.process(table.diagonal(s));
    }
    return table;
}

// Re-derives every entry of the resumed prefix from its predecessors; a
// corrupted value anywhere in the prefix is caught here before the engine
// builds on top of it.
void validate_resumed_prefix(const CoeffTable& table) {
    if (table.contains({0, 0}) && table.coefficient({0, 0}) != 1)
        throw CheckpointMismatch("entry (0, 0) must be 1");
    const long completed = table.completed_weight();
    for (long s = 1; s <= completed; ++s) {
        for (Index idx : table.diagonal(s)) {
            mpz_class expected;
            try {
                expected = recursion_value(table, idx);
            } catch (const DivisibilityViolation&) {
                throw CheckpointMismatch(
                    "stored prefix is inconsistent near (" +
                    std::to_string(idx.i) + ", " + std::to_string(idx.j) + ")");
            }
            if (expected != table.coefficient(idx))
                throw CheckpointMismatch(
                    "stored entry (" + std::to_string(idx.i) + ", " +
                    std::to_string(idx.j) + ") disagrees with recomputation");
        }
    }
}

}  // namespace

CoeffTable compute_rectangle(long max_i, long max_j, unsigned workers) {
    return run_engine(CoeffTable(max_i, max_j), workers, false);
}

CoeffTable compute_rectangle(long max_i, long max_j, unsigned workers,
                             const Checkpoint& resume_from) {
    if (resume_from.max_i() != max_i || resume_from.max_j() != max_j)
        throw CheckpointMismatch(
            "snapshot bounds (" + std::to_string(resume_from.max_i()) + ", " +
            std::to_string(resume_from.max_j()) + ") do not match request (" +
            std::to_string(max_i) + ", " + std::to_string(max_j) + ")");
    CoeffTable table = table_from_checkpoint(resume_from);
    validate_resumed_prefix(table);
    return run_engine(std::move(table), workers, true);
}

}  // namespace sigma
