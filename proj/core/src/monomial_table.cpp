#include "wrl/veronese/monomial_table.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wrl::veronese {

namespace {
std::mutex registry_mutex;
std::map<std::pair<int, int>, const MonomialTable*>& registry() {
  static std::map<std::pair<int, int>, const MonomialTable*> r;
  return r;
}
}  // namespace

const MonomialTable& MonomialTable::get(int m, int d) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(m, d);
  auto it = registry().find(key);
  if (it != registry().end()) return *it->second;
  const auto* t = new MonomialTable(m, d);  // cached for the process lifetime
  registry()[key] = t;
  return *t;
}

std::uint64_t MonomialTable::pack(const std::vector<unsigned>& expo, int bits) {
  std::uint64_t key = 0;
  for (unsigned e : expo) key = (key << bits) | e;
  return key;
}

MonomialTable::MonomialTable(int m, int d) : m_(m), d_(d) {
  if (m < 1 || d < 1) throw std::invalid_argument("MonomialTable: need m >= 1 and d >= 1");
  bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(d))));
  if ((m + 1) * bits_ > 64)
    throw std::invalid_argument("MonomialTable: (m, d) too large for packed lookup keys");

  // descending lex enumeration
  std::vector<unsigned> expo(m + 1, 0);
  const auto emit = [&](auto&& self, int var, int remaining) -> void {
    if (var == m) {
      expo[var] = remaining;
      exps_.push_back(expo);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      expo[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  emit(emit, 0, d);

  weights_.reserve(exps_.size());
  lookup_.reserve(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    weights_.push_back(exactmath::multinomial(d, exps_[i]));
    lookup_.emplace(pack(exps_[i], bits_), static_cast<std::uint32_t>(i));
  }
}

std::size_t MonomialTable::index(const std::vector<unsigned>& expo) const {
  auto it = lookup_.find(pack(expo, bits_));
  if (it == lookup_.end()) throw std::out_of_range("MonomialTable: exponent not in table");
  return it->second;
}

}  // namespace wrl::veronese
