#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace pslgcount::detail {

// Owning wrapper around an mpfr_t. Precision is fixed at construction.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  MpfrValue(const MpfrValue& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpfrValue& operator=(const MpfrValue& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~MpfrValue() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Fixed-point decimal with `digits` digits after the point, rounded with `rnd`.
  std::string to_fixed(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "R" + rounding_char(rnd) + "f";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

 private:
  static std::string rounding_char(mpfr_rnd_t rnd) {
    switch (rnd) {
      case MPFR_RNDD: return "D";
      case MPFR_RNDU: return "U";
      case MPFR_RNDZ: return "Z";
      default: return "N";
    }
  }

  mpfr_t v_;
};

}  // namespace pslgcount::detail
