#pragma once

#include <chrono>
#include <optional>

namespace pgturan {

/// Wall-clock budget shared by the search routines. A default-constructed
/// Deadline never expires; a zero budget is expired from the start.
class Deadline
{
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline after(double seconds)
    {
        Deadline d;
        if (seconds <= 0.0) {
            d.expired_ = true;
        } else {
            d.limit_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
        }
        return d;
    }

    static Deadline unlimited() { return {}; }

    bool expired() const
    {
        if (expired_)
            return true;
        if (limit_ && Clock::now() >= *limit_)
            expired_ = true;
        return expired_;
    }

    /// Amortised check for hot loops: polls the clock once per 1024 calls.
    bool poll() const
    {
        if (expired_)
            return true;
        if ((++ticks_ & 1023U) != 0)
            return false;
        return expired();
    }

private:
    std::optional<Clock::time_point> limit_;
    mutable bool expired_ = false;
    mutable unsigned ticks_ = 0;
};

} // namespace pgturan
