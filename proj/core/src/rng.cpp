#include "mcgsig/rng.hpp"

namespace mcgsig {

Word random_word(Rng& rng, const std::vector<std::string>& names, std::size_t max_len) {
  const std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_len)));
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& name = names[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(names.size()) - 1))];
    long e = static_cast<long>(rng.uniform(-3, 2));
    if (e >= 0) ++e;  // skip zero
    w.push_back({name, e});
  }
  return w;
}

}  // namespace mcgsig
