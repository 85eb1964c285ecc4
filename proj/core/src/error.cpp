/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "frod/error.hpp"

namespace frod {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Label: return "LabelError";
    case ErrorKind::Split: return "SplitError";
    case ErrorKind::Param: return "ParamError";
    case ErrorKind::SubsetMismatch: return "SubsetMismatch";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::DegenerateSet: return "DegenerateSet";
    case ErrorKind::DegenerateLabels: return "DegenerateLabels";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::ZeroEntropy: return "ZeroEntropy";
    case ErrorKind::AttributeMismatch: return "AttributeMismatch";
    case ErrorKind::EmptyNormals: return "EmptyNormals";
    case ErrorKind::DegenerateTruth: return "DegenerateTruth";
  }
  return "Error";
}

}  // namespace frod
