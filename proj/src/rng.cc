#include "vasnet/rng.h"

#include <cmath>

namespace vasnet
{

std::uint64_t
mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double
RandomStream::uniform()
{
    return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
}

double
RandomStream::normal(double mean, double sigma)
{
    std::normal_distribution<double> dist(mean, sigma);
    return dist(m_engine);
}

double
RandomStream::exponential(double rate)
{
    // 1 - u lies in (0, 1], so the log is finite.
    return -std::log(1.0 - uniform()) / rate;
}

std::uint64_t
RandomStream::below(std::uint64_t n)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    return dist(m_engine);
}

double
LinkDraws::uniform(std::uint64_t msg_id, std::uint32_t hop, std::uint64_t receiver_code) const
{
    std::uint64_t h = mix64(m_key ^ mix64(msg_id));
    h = mix64(h ^ (static_cast<std::uint64_t>(hop) * 0xd1342543de82ef95ULL));
    h = mix64(h ^ receiver_code);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t
derive_seed(std::uint64_t master, StreamId stream)
{
    return mix64(mix64(master) ^ (static_cast<std::uint64_t>(stream) * 0x9e3779b97f4a7c15ULL));
}

RngStreams::RngStreams(std::uint64_t master)
    : arrival(derive_seed(master, StreamId::Arrival)),
      link(derive_seed(master, StreamId::Link)),
      sleep(derive_seed(master, StreamId::Sleep)),
      noise(derive_seed(master, StreamId::Noise))
{
}

} // namespace vasnet
