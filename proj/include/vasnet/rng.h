#ifndef VASNET_RNG_H
#define VASNET_RNG_H

#include <cstdint>
#include <random>

namespace vasnet
{

/// SplitMix64 finalizer; used to derive sub-stream seeds and keyed draws.
std::uint64_t mix64(std::uint64_t x);

/**
 * Sequential random stream. All draws used by the simulator go through
 * these helpers so a stream's consumption is easy to reason about.
 */
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed) : m_engine(seed) {}

    /// Uniform in [0, 1) with 53 bits of resolution; never returns 1.
    double uniform();
    double normal(double mean, double sigma);
    double exponential(double rate);
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    std::mt19937_64& engine() { return m_engine; }

  private:
    std::mt19937_64 m_engine;
};

/**
 * Counter-based link-loss draws. The draw for a transmission attempt is a
 * pure function of (stream key, message id, hop index, receiver code), so two
 * runs that share a seed see the same fading on the same attempt regardless
 * of how many other draws either run has made.
 */
class LinkDraws
{
  public:
    explicit LinkDraws(std::uint64_t key) : m_key(key) {}

    double uniform(std::uint64_t msg_id, std::uint32_t hop, std::uint64_t receiver_code) const;

  private:
    std::uint64_t m_key;
};

enum class StreamId : std::uint64_t
{
    Arrival = 1,
    Link = 2,
    Sleep = 3,
    Noise = 4,
};

std::uint64_t derive_seed(std::uint64_t master, StreamId stream);

/// The four independent sub-streams split from a scenario seed.
struct RngStreams
{
    explicit RngStreams(std::uint64_t master);

    RandomStream arrival;
    LinkDraws link;
    RandomStream sleep;
    RandomStream noise;
};

} // namespace vasnet

#endif // VASNET_RNG_H
