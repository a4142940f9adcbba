/*
   Copyright 2026 The camols Authors

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

#ifndef CAMOLS_ERROR_HPP
#define CAMOLS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace camols {

enum class Errc {
    // gf
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    ElementOutOfRange,
    DivisionByZero,
    // poly
    FieldMismatch,
    BothZero,
    DegreeTooSmall,
    // linalg
    NonlinearRule,
    DimensionUnderflow,
    NotSquare,
    Singular,
    DimensionMismatch,
    // ca
    EvenWindow,
    NumberOutOfRange,
    ConfigTooShort,
    LengthMismatch,
    TableTooLarge,
    InvalidAutomaton,
    // designs
    NotBipermutive,
    BadBlockLength,
    OrderTooLarge,
    OrderMismatch,
    IndexOutOfRange,
    NotLatin,
    TooFewSquares,
    NotCoprime,
    NotMols,
    ShapeMismatch,
    SearchTooLarge,
    ZeroConstant,
    // sss
    NotEnoughPolynomials,
    BadParameters,
    SamePlayer,
    NoMatchingRow,
    SecretOutOfRange,
    AmbiguousRow,
    NoRow,
    DuplicatePositions,
    AuditTooLarge,
    // io
    Parse,
    HashMismatch,
};

std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// contract that was violated; `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace camols

#endif
