#pragma once

#include <stdexcept>
#include <string>

namespace spor {

// Input that fails to parse: graph/net/pairs text files, oracle blobs.
// Messages carry "file:line:" prefixes where a line is known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation contract: uncertified net handed to an
// oracle build, weighted graph where an unweighted one is required,
// contracting base embedding, vertex id out of range.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed. The perturbation uniqueness check reports
// "reseed required" through this type.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Oracle deserialization failures, each kind reported distinctly.
class SerializationError : public ParseError {
public:
    using ParseError::ParseError;
};

class VersionMismatchError : public SerializationError {
public:
    using SerializationError::SerializationError;
};

class TruncationError : public SerializationError {
public:
    using SerializationError::SerializationError;
};

class ChecksumError : public SerializationError {
public:
    using SerializationError::SerializationError;
};

} // namespace spor
