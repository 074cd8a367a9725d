#pragma once

// Shared test oracles.  The digit strings were computed with an independent
// arbitrary-precision implementation (mpmath at 700+ bits) and frozen here;
// tests assert that certified enclosures are consistent with them.

#include <string>

#include "bakerkit/ball.hpp"

namespace oracle {

// 50-digit reference values (correctly rounded in the last digit)
inline const char* kAlpha = "1.4655712318767680266567312252199391080255775684723";
inline const char* kGamma = "1.6180339887498948482045868343656381177203091798058";
inline const char* kA = "0.41723798792621877762147551641029254710239234348115";
inline const char* kAbsBeta = "0.82603135765418695596898700199772132767189630264908";
inline const char* kAbsB = "0.27805277380442078531143629462038761120685320643533";
inline const char* kLogAlpha = "0.38224508584003564132935849918485739375941642242020";
inline const char* kLogGamma = "0.48121182505960344749775891342436842313518433438566";
inline const char* kTau = "0.79433851359053848570557671444314662940428217079998";
inline const char* kRatio = "1.2589091210998171934095501414758343208432863898211";
inline const char* kHAlpha = "0.12741502861334521377645283306161913125313880747340";
inline const char* kHGamma = "0.24060591252980172374887945671218421156759216719283";
inline const char* kHA = "1.1446624014950487486430547748474524034833129768269";
inline const char* kH5aBound = "2.7541003139291491232438141080736400430089143310954";
inline const char* kSqrt5 = "2.2360679774997896964091736687312762354406183596115";
inline const char* kEps1 = "0.26088502886436541269063923949421740844354405992902";
inline const char* kEps2Min71 = "0.0017507777736535717750954478589757863596090905034284";
inline const char* kW1 = "173.8929804485863823544892";
inline const char* kW2Forced71 = "178.3645076990465665952954";
inline const char* kMatveevC1 = "264170352340154.766";

// round-1 convergent of tau (index 72)
inline const char* kP72 = "29721909555760487844132538948692737";
inline const char* kQ72 = "37417183036250693833016580755802629";
inline const char* kP71 = "3194055037246978157952257926560636";
inline const char* kQ71 = "4021025019685037142147505686136939";

// Does the enclosure agree with a rounded reference decimal?  The decimal is
// only known to half a unit in its last digit, so the enclosure is widened
// by `slack_digits10` decimal orders before the containment test.
inline bool agrees_with(const bakerkit::Ball& b, const std::string& decimal,
                        long slack_digits10) {
  mpq_class v = bakerkit::parse_exact_number(decimal);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(slack_digits10));
  mpq_class slack(1, scale);
  return b.sup_rational() >= v - slack && b.inf_rational() <= v + slack;
}

inline mpq_class q(const std::string& s) { return bakerkit::parse_exact_number(s); }

}  // namespace oracle
