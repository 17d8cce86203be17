// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOSEMI_ERRORS_HPP_
#define AUTOSEMI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace autosemi {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different alphabets.
struct AlphabetMismatchError : Error {
  using Error::Error;
};

/// A word over the padded pair alphabet is not a valid convolution image.
struct InvalidPaddingError : Error {
  using Error::Error;
};

/// A bounded search ran out of budget before finding a witness.
struct BoundExhaustedError : Error {
  using Error::Error;
};

/// A generator is not contained in the language of representatives.
struct GeneratorNotInLError : Error {
  using Error::Error;
};

/// The requested representative language differs from the current one by
/// an infinite set of words.
struct InfiniteDifferenceError : Error {
  using Error::Error;
};

/// The requested representative language misses some semigroup element.
struct NotOntoError : Error {
  using Error::Error;
};

/// The empty word appeared where only nonempty representatives are allowed.
struct EmptyWordError : Error {
  using Error::Error;
};

/// Two distinct generators represent the same element, so no cross-section
/// can contain all of them as single letters.
struct GeneratorsNotInjectiveError : Error {
  using Error::Error;
};

/// The semigroup has no identity element.
struct NotAMonoidError : Error {
  using Error::Error;
};

/// A word expected to represent an idempotent does not.
struct NotIdempotentError : Error {
  using Error::Error;
};

/// The semigroup is not completely zero-simple.
struct NotCzsError : Error {
  using Error::Error;
};

/// The semigroup is not completely simple.
struct NotCompletelySimpleError : Error {
  using Error::Error;
};

/// A multiplication table fails the associativity check.
struct NotAssociativeError : Error {
  using Error::Error;
};

/// A rewriting run exceeded its step bound.
struct StepBoundExceededError : Error {
  using Error::Error;
};

/// The structure violates a totality invariant mid-computation.
struct InconsistentStructureError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace autosemi

#endif  // AUTOSEMI_ERRORS_HPP_
