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

#ifndef G2T_ERROR_HPP
#define G2T_ERROR_HPP

#include <stdexcept>
#include <string>

namespace g2t {

enum class Errc {
  ParseError,
  InvalidArgument,
  DivisionByZero,
  NonInvertible,
  BadPrime,
  BadReduction,
  SingularCurve,
  SingularOrWrongGenus,
  ZeroWeight,
  PointNotOnCurve,
  InvalidDivisor,
  InvolutionPair,
  OracleMismatch,
  NoGoodPrimes,
  OrderMismatch,
  NotFound,
  DegenerateParameter,
  IdentityPoint,
  PoleOfMap,
  PoleEncountered,
  InvariantError,
  TooFewPrimes,
};

const char* errc_name(Errc code) noexcept;

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace g2t

#endif
