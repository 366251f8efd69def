#ifndef DISCORD_IO_HPP
#define DISCORD_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "discord/channels.hpp"
#include "discord/measures.hpp"
#include "discord/states.hpp"

namespace discord {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State schema: {"d_A": int, "d_B": int, "entries": [[re, im], ...]} with
// entries row-major over the (d_A * d_B)^2 matrix.
nlohmann::json state_to_json(const BipartiteState& state);
BipartiteState state_from_json(const nlohmann::json& j);

// Channel schema: {"d_in": int, "d_out": int, "kraus": [entries, ...]} with
// each Kraus matrix encoded row-major as above (d_out x d_in).
nlohmann::json channel_to_json(const Channel& ch);
Channel channel_from_json(const nlohmann::json& j);

BipartiteState load_state(const std::string& path);
Channel load_channel(const std::string& path);

nlohmann::json report_to_json(const MeasureReport& rep);

// Header: trial,seed,before,after,delta,channel_desc
std::string audit_to_csv(const std::vector<AuditRow>& rows);
nlohmann::json audit_to_json(const std::vector<AuditRow>& rows);

}  // namespace discord

#endif
