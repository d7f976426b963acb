#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <string_view>

namespace gfdm {

/// Pipeline stages that accumulate complex-multiplication counts.
/// The first five cover the structured filter computation, the last two
/// instrument the dense reference solver.
enum class Stage {
    FreqGs = 0,     // (a) channel scaling of the precomputed frequency-domain columns
    Tridiagonal,    // (b) masked inner products forming the per-block systems
    Solve,          // (c) cyclic tridiagonal factor + solve
    ZakRecon,       // (d) transform of the filter blocks back to the time domain
    Dgu,            // right-hand-side formation (not part of the closed-form budget)
    DirectFactor,   // dense Cholesky factorization
    DirectSubst,    // dense forward/backward substitution
    Count_
};

constexpr std::size_t kStageCount = static_cast<std::size_t>(Stage::Count_);

std::string_view stageName(Stage s);

/// Tally of complex multiplications attributed to named stages.
/// Accumulation is race-free so per-block work may run concurrently;
/// counts are monotone within a run and resettable between runs.
class OpCounter {
public:
    OpCounter() { reset(); }

    void add(Stage s, std::uint64_t n) noexcept {
        counts_[static_cast<std::size_t>(s)].fetch_add(n, std::memory_order_relaxed);
    }

    std::uint64_t count(Stage s) const noexcept {
        return counts_[static_cast<std::size_t>(s)].load(std::memory_order_relaxed);
    }

    /// Sum over the five fast-path stages.
    std::uint64_t fastTotal() const noexcept {
        std::uint64_t t = 0;
        t += count(Stage::FreqGs);
        t += count(Stage::Tridiagonal);
        t += count(Stage::Solve);
        t += count(Stage::ZakRecon);
        t += count(Stage::Dgu);
        return t;
    }

    /// Sum over the dense-solver stages.
    std::uint64_t directTotal() const noexcept {
        return count(Stage::DirectFactor) + count(Stage::DirectSubst);
    }

    void reset() noexcept {
        for (auto& c : counts_) c.store(0, std::memory_order_relaxed);
    }

private:
    std::array<std::atomic<std::uint64_t>, kStageCount> counts_;
};

}  // namespace gfdm
