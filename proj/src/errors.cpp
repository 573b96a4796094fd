#include "floer/errors.hpp"

namespace floer {

const char* to_string(ModelError e) {
    switch (e) {
    case ModelError::syntax:            return "syntax";
    case ModelError::duplicate_name:    return "duplicate_name";
    case ModelError::unknown_generator: return "unknown_generator";
    case ModelError::duplicate_arrow:   return "duplicate_arrow";
    case ModelError::filtration:        return "filtration";
    case ModelError::maslov_step:       return "maslov_step";
    case ModelError::d_squared:         return "d_squared";
    }
    return "?";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ValidationError::ValidationError(ModelError code, const std::string& what, std::size_t line)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
      code_(code), line_(line) {}

NotStandardError::NotStandardError(const std::string& what) : std::runtime_error(what) {}

MissingDataError::MissingDataError(const std::string& what) : std::runtime_error(what) {}

InternalConsistencyError::InternalConsistencyError(const std::string& what)
    : std::logic_error(what) {}

} // namespace floer
