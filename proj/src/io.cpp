#include "bwcv/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bwcv/core.hpp"

namespace bwcv {

using nlohmann::json;

namespace {

std::vector<int> to_one_based(const std::vector<int>& zero_based) {
  std::vector<int> result;
  result.reserve(zero_based.size());
  for (int x : zero_based) result.push_back(x + 1);
  return result;
}

json instance_to_json(const Instance& instance) {
  json ballots = json::array();
  for (const auto& ballot : instance.ballots) ballots.push_back(to_one_based(ballot));
  return json{{"ballots", std::move(ballots)},
              {"k", instance.committee_size},
              {"m", instance.num_candidates},
              {"n", instance.num_voters}};
}

json rationals_to_json(const std::vector<Rational>& values) {
  json result = json::array();
  for (const auto& value : values) result.push_back(value.str());
  return result;
}

std::vector<Rational> rationals_from_json(const json& values) {
  std::vector<Rational> result;
  for (const auto& value : values) result.push_back(Rational::parse(value.get<std::string>()));
  return result;
}

json lottery_to_json(const RandomizedCommittee& lottery) {
  json entries = json::array();
  for (const auto& entry : lottery.entries) {
    entries.push_back(json{{"committee", to_one_based(entry.committee.members)},
                           {"probability", entry.probability.str()}});
  }
  return entries;
}

RandomizedCommittee lottery_from_json(const json& entries) {
  RandomizedCommittee lottery;
  for (const auto& entry : entries) {
    RandomizedCommittee::Entry e;
    e.probability = Rational::parse(entry.at("probability").get<std::string>());
    for (int c : entry.at("committee")) e.committee.members.push_back(c - 1);
    std::sort(e.committee.members.begin(), e.committee.members.end());
    lottery.entries.push_back(std::move(e));
  }
  return lottery;
}

json witness_to_json(const Witness& witness) {
  return json{{"achieved", witness.achieved.str()},
              {"candidates", to_one_based(witness.candidates)},
              {"level", witness.level},
              {"required", witness.required.str()},
              {"voters", to_one_based(witness.voters)}};
}

Witness witness_from_json(const json& value) {
  Witness witness;
  witness.achieved = Rational::parse(value.at("achieved").get<std::string>());
  witness.required = Rational::parse(value.at("required").get<std::string>());
  witness.level = value.at("level").get<int>();
  for (int c : value.at("candidates")) witness.candidates.push_back(c - 1);
  for (int v : value.at("voters")) witness.voters.push_back(v - 1);
  std::sort(witness.candidates.begin(), witness.candidates.end());
  std::sort(witness.voters.begin(), witness.voters.end());
  return witness;
}

}  // namespace

std::string write_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
  }
  try {
    std::vector<std::vector<int>> ballots;
    for (const auto& ballot : doc.at("ballots")) {
      ballots.push_back(ballot.get<std::vector<int>>());
    }
    return validate_instance(doc.at("n").get<int>(), doc.at("m").get<int>(),
                             doc.at("k").get<int>(), ballots);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance file missing fields: ") + e.what());
  }
}

std::string instance_digest(const Instance& instance) {
  const std::string canonical = write_instance(instance);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string digest(16, '0');
  for (int i = 15; i >= 0; --i) {
    digest[i] = hex[hash & 0xF];
    hash >>= 4;
  }
  return digest;
}

Instance instance_from_ballot_lines(const std::string& text, int committee_size,
                                    std::optional<int> num_candidates) {
  std::vector<std::vector<int>> ballots;
  int max_index = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<int> ballot;
    int candidate = 0;
    while (fields >> candidate) {
      ballot.push_back(candidate);
      max_index = std::max(max_index, candidate);
    }
    if (!fields.eof()) {
      throw std::invalid_argument("ballot line is not a list of integers: " + line);
    }
    if (!ballot.empty() || !line.empty()) ballots.push_back(std::move(ballot));
  }
  const int m = num_candidates.value_or(max_index);
  return validate_instance(static_cast<int>(ballots.size()), m, committee_size, ballots);
}

std::string write_report(const RunReport& report) {
  json doc{{"fractional", rationals_to_json(report.shares.shares)},
           {"instance_digest", report.digest},
           {"k", report.committee_size},
           {"lottery", lottery_to_json(report.lottery)},
           {"m", report.num_candidates},
           {"n", report.num_voters},
           {"rule", report.rule},
           {"timing_ms", report.timing_ms}};
  if (report.completion) doc["completion"] = *report.completion;
  if (report.committee) doc["committee"] = to_one_based(*report.committee);
  if (report.purchase_order) {
    json order = json::array();
    for (const auto& [candidate, price] : *report.purchase_order) {
      order.push_back(json{{"candidate", candidate + 1}, {"price", price.str()}});
    }
    doc["purchase_order"] = std::move(order);
  }
  if (report.trace) {
    json steps = json::array();
    for (const auto& step : *report.trace) {
      steps.push_back(json{{"candidates", to_one_based(step.candidates)},
                           {"depth", step.depth},
                           {"voters", to_one_based(step.voters)}});
    }
    doc["trace"] = std::move(steps);
  }
  if (report.budgets) doc["budgets"] = rationals_to_json(*report.budgets);
  if (report.residual_seats) doc["residual_seats"] = *report.residual_seats;

  json verdicts = json::object();
  for (const auto& [axiom, verdict] : report.verdicts) {
    json entry{{"satisfied", verdict.satisfied}};
    if (verdict.witness) entry["witness"] = witness_to_json(*verdict.witness);
    verdicts[axiom] = std::move(entry);
  }
  doc["verdicts"] = std::move(verdicts);
  return doc.dump(2) + "\n";
}

RunReport parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report file is not valid JSON: ") + e.what());
  }
  try {
    RunReport report;
    report.rule = doc.at("rule").get<std::string>();
    report.digest = doc.at("instance_digest").get<std::string>();
    report.num_voters = doc.at("n").get<int>();
    report.num_candidates = doc.at("m").get<int>();
    report.committee_size = doc.at("k").get<int>();
    report.shares.shares = rationals_from_json(doc.at("fractional"));
    report.lottery = lottery_from_json(doc.at("lottery"));
    report.timing_ms = doc.at("timing_ms").get<std::int64_t>();
    if (doc.contains("completion")) report.completion = doc["completion"].get<std::string>();
    if (doc.contains("committee")) {
      std::vector<int> members;
      for (int c : doc["committee"]) members.push_back(c - 1);
      report.committee = std::move(members);
    }
    if (doc.contains("purchase_order")) {
      std::vector<std::pair<int, Rational>> order;
      for (const auto& entry : doc["purchase_order"]) {
        order.emplace_back(entry.at("candidate").get<int>() - 1,
                           Rational::parse(entry.at("price").get<std::string>()));
      }
      report.purchase_order = std::move(order);
    }
    if (doc.contains("trace")) {
      std::vector<CohesiveGroup> steps;
      for (const auto& step : doc["trace"]) {
        CohesiveGroup group;
        group.depth = step.at("depth").get<int>();
        for (int c : step.at("candidates")) group.candidates.push_back(c - 1);
        for (int v : step.at("voters")) group.voters.push_back(v - 1);
        steps.push_back(std::move(group));
      }
      report.trace = std::move(steps);
    }
    if (doc.contains("budgets")) report.budgets = rationals_from_json(doc["budgets"]);
    if (doc.contains("residual_seats")) report.residual_seats = doc["residual_seats"].get<int>();
    for (const auto& [axiom, entry] : doc.at("verdicts").items()) {
      Verdict verdict;
      verdict.satisfied = entry.at("satisfied").get<bool>();
      if (entry.contains("witness")) verdict.witness = witness_from_json(entry["witness"]);
      report.verdicts[axiom] = std::move(verdict);
    }
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report file missing fields: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace bwcv
