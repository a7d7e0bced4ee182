#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohesion {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A document or argument violates a declared invariant. The message names
/// the offending path, e.g. "sentences[2].phrases[0].subject[1]".
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Input bytes are not well-formed JSON.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what), byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// annotated-only extraction hit a sentence without phrase annotations.
class MissingAnnotationError : public Error {
public:
    MissingAnnotationError(const std::string& what, int sentence_index)
        : Error(what), sentence_index_(sentence_index) {}

    int sentence_index() const { return sentence_index_; }

private:
    int sentence_index_;
};

/// A sentence-pair operation was asked to relate a sentence to itself.
class InvalidPairError : public Error {
public:
    explicit InvalidPairError(const std::string& what) : Error(what) {}
};

/// An operation requiring M >= 2 sentences was given fewer.
class DegenerateDocumentError : public Error {
public:
    explicit DegenerateDocumentError(const std::string& what) : Error(what) {}
};

/// An evaluation run has no usable documents left after skips.
class EmptyCorpusError : public Error {
public:
    explicit EmptyCorpusError(const std::string& what) : Error(what) {}
};

}  // namespace cohesion
