/*
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

#ifndef FROBLIE_ERRORS_HPP
#define FROBLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace froblie {

// Base of every error this library raises on contract violations.
// Each subtype corresponds to one named failure mode of the public API.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpec : Error {
    using Error::Error;
};
struct NoRoot : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct GeneratorSetMismatch : Error {
    using Error::Error;
};
struct NotClosed : Error {
    using Error::Error;
};
struct MissingRoot : Error {
    using Error::Error;
};
struct NotDirectSum : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct OrderMismatch : Error {
    using Error::Error;
};
struct ZeroIndexSlot : Error {
    using Error::Error;
};
struct NotAMember : Error {
    using Error::Error;
};
struct CapTooSmall : Error {
    using Error::Error;
};
struct IndexSumViolation : Error {
    using Error::Error;
};
struct LevelsIncomplete : Error {
    using Error::Error;
};
struct TowerIncomplete : Error {
    using Error::Error;
};
struct PreconditionViolation : Error {
    using Error::Error;
};
struct ClassCapExceeded : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct HypothesisError : Error {
    using Error::Error;
};

}  // namespace froblie

#endif
