#include "vasnet/mac.h"

#include <cmath>
#include <stdexcept>

namespace vasnet
{

Admission
PriorityQueue::enqueue(Message m)
{
    auto& lane = m_lanes[rank(m.cls)];
    if (lane.size() >= m_capacity)
    {
        return Admission::LaneFull;
    }
    lane.push_back(std::move(m));
    return Admission::Accepted;
}

std::optional<Message>
PriorityQueue::dequeue()
{
    for (auto& lane : m_lanes)
    {
        if (!lane.empty())
        {
            Message m = std::move(lane.front());
            lane.pop_front();
            return m;
        }
    }
    return std::nullopt;
}

std::vector<Message>
PriorityQueue::flush()
{
    std::vector<Message> out;
    out.reserve(size());
    for (auto& lane : m_lanes)
    {
        for (auto& m : lane)
        {
            out.push_back(std::move(m));
        }
        lane.clear();
    }
    return out;
}

std::size_t
PriorityQueue::size() const
{
    std::size_t n = 0;
    for (const auto& lane : m_lanes)
    {
        n += lane.size();
    }
    return n;
}

Channel
assign_channel(MessageClass cls, ComfortRotor& rotor)
{
    switch (cls)
    {
    case MessageClass::EventSafety:
        return {kEventSafetyChannel};
    case MessageClass::BeaconSafety:
        return {kBeaconSafetyChannel};
    case MessageClass::Comfort:
        break;
    }
    const int span = kChannelCount - kFirstComfortChannel;
    const Channel c{kFirstComfortChannel + rotor.next % span};
    rotor.next = (rotor.next + 1) % span;
    return c;
}

void
validate_link(const LinkModel& link)
{
    if (!(link.loss_probability >= 0.0 && link.loss_probability < 1.0))
    {
        throw std::invalid_argument("link.loss_probability must be in [0, 1)");
    }
    if (!(link.data_rate > 0.0) || !std::isfinite(link.data_rate))
    {
        throw std::invalid_argument("link.data_rate must be > 0");
    }
    if (!(link.default_range > 0.0) || !std::isfinite(link.default_range))
    {
        throw std::invalid_argument("link.range must be > 0");
    }
}

} // namespace vasnet
