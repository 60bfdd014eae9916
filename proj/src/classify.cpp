#include "mdsforge/classify.hpp"

namespace mdsforge {

ClassificationReport classify(const LinearCode& code, const std::optional<GtrsCandidate>& candidate,
                              std::uint64_t cap) {
  ClassificationReport rep;
  rep.grs = grs_test(code, cap);
  if (candidate && code.dimension() >= 1 &&
      static_cast<Index>(candidate->alpha.size()) == code.length()) {
    rep.gtrs_attempted = true;
    rep.gtrs = gtrs_recognize(code.generator(), candidate->alpha, candidate->v);
  }
  return rep;
}

}  // namespace mdsforge
