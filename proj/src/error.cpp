#include "bondagelab/error.hpp"

namespace bondagelab {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidId: return "InvalidId";
        case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateNeighbor: return "DuplicateNeighbor";
        case Errc::NotConnected: return "NotConnected";
        case Errc::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::BadParams: return "BadParams";
        case Errc::ParseError: return "ParseError";
        case Errc::TooLarge: return "TooLarge";
        case Errc::SchemeMismatch: return "SchemeMismatch";
        case Errc::WitnessMismatch: return "WitnessMismatch";
        case Errc::MissingExternalNeighbor: return "MissingExternalNeighbor";
        case Errc::NotAttachment: return "NotAttachment";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::NoConfiguration: return "NoConfiguration";
        case Errc::NoRecipe: return "NoRecipe";
    }
    return "Unknown";
}

}  // namespace bondagelab
