// Acceptance gate: runs the pinned end-to-end criteria and prints one
// PASS/FAIL line per criterion.  Usage: acceptance [id...]  (default: all)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= 8; ++i) ids.push_back(i);

  bool all_pass = true;
  for (int id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    acceptance::CriterionResult r;
    try {
      r = acceptance::run_criterion(id);
    } catch (const std::exception& ex) {
      r.id = id;
      r.pass = false;
      r.title = "exception";
      r.lines.push_back(std::string("exception: ") + ex.what());
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << " ("
              << secs << " s)\n";
    for (const auto& line : r.lines) std::cout << "    " << line << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
