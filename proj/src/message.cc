#include "vasnet/message.h"

namespace vasnet
{

const char*
to_string(MessageClass c)
{
    switch (c)
    {
    case MessageClass::EventSafety:
        return "event-safety";
    case MessageClass::BeaconSafety:
        return "beacon-safety";
    case MessageClass::Comfort:
        return "comfort";
    }
    return "?";
}

namespace
{

struct ClassOf
{
    MessageClass operator()(const AccidentNotice&) const { return MessageClass::EventSafety; }
    MessageClass operator()(const SpeedViolationReport&) const { return MessageClass::BeaconSafety; }
    MessageClass operator()(const Beacon&) const { return MessageClass::BeaconSafety; }
    MessageClass operator()(const TheftQuery&) const { return MessageClass::Comfort; }
    MessageClass operator()(const TheftReply&) const { return MessageClass::Comfort; }
    MessageClass operator()(const ComfortData&) const { return MessageClass::Comfort; }
};

struct NameOf
{
    const char* operator()(const AccidentNotice&) const { return "accident"; }
    const char* operator()(const SpeedViolationReport&) const { return "speed-violation"; }
    const char* operator()(const Beacon&) const { return "beacon"; }
    const char* operator()(const TheftQuery&) const { return "theft-query"; }
    const char* operator()(const TheftReply&) const { return "theft-reply"; }
    const char* operator()(const ComfortData&) const { return "comfort"; }
};

} // namespace

MessageClass
class_for(const Payload& payload)
{
    return std::visit(ClassOf{}, payload);
}

const char*
payload_name(const Payload& payload)
{
    return std::visit(NameOf{}, payload);
}

void
Message::record_hop(const NodeId& hop)
{
    trace.push_back(hop);
    hop_count = static_cast<int>(trace.size()) - 1;
}

} // namespace vasnet
