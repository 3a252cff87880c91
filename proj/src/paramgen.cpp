#include "ricci/paramgen.hpp"

#include <cmath>

#include "ricci/classify.hpp"
#include "ricci/errors.hpp"

namespace ricci {

RicciParams draw_params(ParamFamily family, ParamRng& rng) {
  RicciParams p;
  switch (family) {
    case ParamFamily::A0Negative: {
      p.b = rng.uniform(0.1, 1.0);
      p.c = rng.uniform(-0.8, 0.8);
      const double m = rng.uniform(0.25, 3.0);  // b d - c^2
      p.d = (p.c * p.c + m) / p.b;
      return p;
    }
    case ParamFamily::A0NegativeBounded: {
      p.b = rng.uniform(1.3, 3.5);
      p.c = rng.uniform(-0.8, 0.8);
      const double m = rng.uniform(0.25, 3.0);
      p.d = (p.c * p.c + m) / p.b;
      return p;
    }
    case ParamFamily::A0Positive: {
      const int mode = int(rng.bits() % 3);
      if (mode == 0) {  // b = 0 half-line family
        p.b = 0.0;
        p.c = rng.signed_uniform(0.4, 1.5);
        p.d = rng.uniform(-1.0, 1.0);
      } else if (mode == 1) {  // b < 0 band family
        p.b = rng.uniform(-2.5, -0.3);
        p.c = rng.uniform(-0.8, 0.8);
        const double disc = rng.uniform(0.25, 3.0);  // c^2 - b d
        p.d = (p.c * p.c - disc) / p.b;
      } else {  // 0 < b < 1 half-line family
        p.b = rng.uniform(0.15, 0.8);
        p.c = rng.uniform(-0.8, 0.8);
        const double disc = rng.uniform(0.25, 3.0);
        p.d = (p.c * p.c - disc) / p.b;
      }
      return p;
    }
    case ParamFamily::B0NegativePlus: {
      const bool complete = rng.bits() & 1u;
      p.a = complete ? rng.uniform(0.15, 1.0) : rng.uniform(1.3, 3.0);
      p.c = -rng.uniform(0.3, 2.0);
      p.d = rng.uniform(-1.5, 1.5);
      p.branch = Branch::Plus;
      return p;
    }
    case ParamFamily::B0NegativeMinus: {
      const bool complete = rng.bits() & 1u;
      p.a = complete ? -rng.uniform(0.15, 1.0) : -rng.uniform(1.3, 3.0);
      p.c = rng.uniform(0.3, 2.0);
      p.d = rng.uniform(-1.5, 1.5);
      p.branch = Branch::Minus;
      return p;
    }
    case ParamFamily::B0PositivePlus: {
      p.a = (rng.bits() & 1u) ? rng.uniform(0.1, 0.85) : -rng.uniform(0.1, 2.5);
      p.c = rng.uniform(0.3, 2.0);
      p.d = rng.uniform(-1.5, 1.5);
      p.branch = Branch::Plus;
      return p;
    }
    case ParamFamily::B0PositiveMinus: {
      p.a = (rng.bits() & 1u) ? -rng.uniform(0.1, 0.85) : rng.uniform(0.1, 2.5);
      p.c = -rng.uniform(0.3, 2.0);
      p.d = rng.uniform(-1.5, 1.5);
      p.branch = Branch::Minus;
      return p;
    }
    case ParamFamily::General: {
      for (int attempt = 0; attempt < 400; ++attempt) {
        p.a = rng.signed_uniform(0.2, 2.2);
        p.b = rng.signed_uniform(0.15, 3.0);
        p.c = rng.uniform(-1.0, 1.0);
        p.d = rng.signed_uniform(0.3, 2.0);
        if (std::abs(std::abs(p.a) - 1.0) < 0.05) continue;  // keep off the barrier margin
        try {
          const ClassificationReport rep = classify(p);
          const double width = rep.interval.hi - rep.interval.lo;
          if (width > 5e-2) return p;
        } catch (const Error&) {
          continue;
        }
      }
      fail(Errc::NumericalFailure, "could not draw general-case parameters");
    }
  }
  fail(Errc::BadParameters, "unknown parameter family");
}

}  // namespace ricci
