#pragma once

#include <string>
#include <vector>

namespace refinery {

struct OpSymbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// Operation symbols with arities.  Names are unique; arity 0 is a constant.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const OpSymbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<OpSymbol>& symbols() const { return symbols_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OpSymbol> symbols_;
};

}  // namespace refinery
