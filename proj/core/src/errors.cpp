#include "hermia/errors.hpp"

namespace hermia {

NotEquitable::NotEquitable(std::size_t row_block, std::size_t col_block,
                           std::size_t row_a, std::size_t row_b)
    : Error("partition is not equitable: block (" + std::to_string(row_block) +
            "," + std::to_string(col_block) + ") has unequal row sums at rows " +
            std::to_string(row_a) + " and " + std::to_string(row_b)),
      row_block_(row_block),
      col_block_(col_block),
      row_a_(row_a),
      row_b_(row_b) {}

ParseError::ParseError(std::string source, std::size_t line, std::string token,
                       const std::string& message)
    : Error(source + ":" + std::to_string(line) + ": " + message + " near '" +
            token + "'"),
      source_(std::move(source)),
      line_(line),
      token_(std::move(token)) {}

}  // namespace hermia
