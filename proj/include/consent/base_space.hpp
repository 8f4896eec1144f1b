#ifndef CONSENT_BASE_SPACE_HPP
#define CONSENT_BASE_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace consent {

using AgentId = int;
using BaseId = int;

/// The depth-0 choice space: an ordered agent list and one finite nonempty
/// label set per agent. Everything deeper is built over this.
struct BaseSpace {
  std::vector<std::string> agents;
  std::vector<std::vector<std::string>> base_choices;

  int agent_count() const { return static_cast<int>(agents.size()); }

  AgentId agent_index(const std::string& name) const {
    for (std::size_t i = 0; i < agents.size(); ++i)
      if (agents[i] == name) return static_cast<AgentId>(i);
    return -1;
  }

  int base_count(AgentId a) const {
    return static_cast<int>(base_choices[static_cast<std::size_t>(a)].size());
  }

  const std::string& base_label(AgentId a, BaseId b) const {
    return base_choices[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  BaseId base_index(AgentId a, const std::string& label) const {
    const auto& v = base_choices[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == label) return static_cast<BaseId>(i);
    return -1;
  }

  /// Empty string when well formed, else a description of the first problem.
  std::string check() const {
    if (agents.empty()) return "no agents";
    if (base_choices.size() != agents.size()) return "base choice sets do not match agents";
    for (std::size_t i = 0; i < agents.size(); ++i) {
      for (std::size_t j = i + 1; j < agents.size(); ++j)
        if (agents[i] == agents[j]) return "duplicate agent '" + agents[i] + "'";
      if (base_choices[i].empty()) return "agent '" + agents[i] + "' has an empty base choice set";
      for (std::size_t j = 0; j < base_choices[i].size(); ++j)
        for (std::size_t k = j + 1; k < base_choices[i].size(); ++k)
          if (base_choices[i][j] == base_choices[i][k])
            return "agent '" + agents[i] + "' has duplicate base choice '" + base_choices[i][j] + "'";
    }
    return "";
  }
};

} // namespace consent

#endif
