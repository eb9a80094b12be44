#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "partycred/party.hpp"

namespace partycred::testing {

/// Candidate names for orders written like "p>a>b".
class Names {
 public:
  explicit Names(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) ids_[names_[i]] = static_cast<CandidateId>(i);
  }

  int size() const { return static_cast<int>(names_.size()); }
  CandidateId operator[](const std::string& name) const { return ids_.at(name); }

  Preference pref(const std::string& order) const {
    std::vector<CandidateId> out;
    std::stringstream in(order);
    std::string token;
    while (std::getline(in, token, '>')) out.push_back(ids_.at(token));
    return Preference(std::move(out));
  }

  Election election(const std::vector<std::pair<std::string, Count>>& ballots) const {
    std::vector<Ballot> out;
    for (const auto& [order, weight] : ballots) out.push_back({pref(order), weight});
    return Election(size(), std::move(out));
  }

  PartyElection parties(const std::vector<std::pair<std::string, Count>>& parties) const {
    std::vector<Party> out;
    for (const auto& [order, size] : parties) out.push_back({pref(order), size});
    return PartyElection(size(), std::move(out));
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, CandidateId> ids_;
};

inline ProblemInstance instance(const Names& names, const std::vector<std::pair<std::string, Count>>& parties,
                                Rule rule, Direction direction, WinnerModel model = WinnerModel::Unique,
                                DestinationMode mode = DestinationMode::One, Count k = 0) {
  return ProblemInstance{names.parties(parties), names["p"], k, std::move(rule), model, mode, direction};
}

}  // namespace partycred::testing
