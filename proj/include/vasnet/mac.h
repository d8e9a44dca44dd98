#ifndef VASNET_MAC_H
#define VASNET_MAC_H

#include "vasnet/message.h"

#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

namespace vasnet
{

enum class Admission
{
    Accepted,
    LaneFull,
};

/**
 * Three FIFO lanes, one per MessageClass, served in strict priority order.
 * Each lane holds at most `capacity` messages; an arrival to a full lane is
 * rejected and left for the caller to count as an overflow drop.
 */
class PriorityQueue
{
  public:
    explicit PriorityQueue(std::size_t capacity = 64) : m_capacity(capacity) {}

    [[nodiscard]] Admission enqueue(Message m);

    /// Oldest message of the highest non-empty class.
    std::optional<Message> dequeue();

    /// Empties every lane, highest class first.
    std::vector<Message> flush();

    std::size_t size() const;
    std::size_t lane_size(MessageClass c) const { return m_lanes[rank(c)].size(); }
    bool empty() const { return size() == 0; }
    std::size_t capacity() const { return m_capacity; }

  private:
    std::size_t m_capacity;
    std::array<std::deque<Message>, kClassCount> m_lanes;
};

inline constexpr int kChannelCount = 7;
inline constexpr int kEventSafetyChannel = 0;
inline constexpr int kBeaconSafetyChannel = 1;
inline constexpr int kFirstComfortChannel = 2;

struct Channel
{
    int id{0};
    bool operator==(const Channel&) const = default;
};

/// Per-sender round-robin state over the comfort channels 2..6.
struct ComfortRotor
{
    int next{0};
};

Channel assign_channel(MessageClass cls, ComfortRotor& rotor);

/// Abstract PHY: unit disk of `default_range` with independent per-link loss.
struct LinkModel
{
    double loss_probability{0.05};
    double data_rate{6e6}; ///< bit/s
    double default_range{1000.0};

    double airtime(std::uint32_t bits) const { return bits / data_rate; }
};

void validate_link(const LinkModel& link);

} // namespace vasnet

#endif // VASNET_MAC_H
