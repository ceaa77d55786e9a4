/*
   Copyright 2026 The g2torsion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "g2t/error.hpp"

namespace g2t {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::BadPrime: return "BadPrime";
    case Errc::BadReduction: return "BadReduction";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::SingularOrWrongGenus: return "SingularOrWrongGenus";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::InvolutionPair: return "InvolutionPair";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::NoGoodPrimes: return "NoGoodPrimes";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::IdentityPoint: return "IdentityPoint";
    case Errc::PoleOfMap: return "PoleOfMap";
    case Errc::PoleEncountered: return "PoleEncountered";
    case Errc::InvariantError: return "InvariantError";
    case Errc::TooFewPrimes: return "TooFewPrimes";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace g2t
