#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bondagelab {

enum class Errc {
    InvalidId,
    AsymmetricAdjacency,
    SelfLoop,
    DuplicateNeighbor,
    NotConnected,
    NotPlanarEmbedding,
    EmptyGraph,
    BadParams,
    ParseError,
    TooLarge,
    SchemeMismatch,
    WitnessMismatch,
    MissingExternalNeighbor,
    NotAttachment,
    DegreeTooSmall,
    SearchExhausted,
    NoConfiguration,
    NoRecipe,
};

std::string_view errc_name(Errc code);

/// Every failure in the library is reported through this type. `vertex` is
/// the offending vertex when the error is attributable to one, else -1.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, int vertex = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code),
          vertex_(vertex) {}

    Errc code() const noexcept { return code_; }
    int vertex() const noexcept { return vertex_; }

private:
    Errc code_;
    int vertex_;
};

}  // namespace bondagelab
