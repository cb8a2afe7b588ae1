#pragma once

#include <stdexcept>
#include <string>

namespace ecgmoe {

// Base class for all library errors. Subcommands map these onto exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidHyper : public Error {
public:
    using Error::Error;
};

class InvalidHeads : public Error {
public:
    using Error::Error;
};

class ZeroVarianceLead : public Error {
public:
    using Error::Error;
};

class TooShortSignal : public Error {
public:
    using Error::Error;
};

class NoPeaksFound : public Error {
public:
    using Error::Error;
};

class InsufficientPeaks : public Error {
public:
    using Error::Error;
};

class UnknownTask : public Error {
public:
    using Error::Error;
};

class EmptyBatch : public Error {
public:
    using Error::Error;
};

class DivergedLoss : public Error {
public:
    using Error::Error;
};

// On-disk format violations. Messages carry the byte offset of the problem.
class FormatError : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    using Error::Error;
};

class ConfigDigestMismatch : public Error {
public:
    using Error::Error;
};

// Run-config file problems. `field` names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& msg)
        : Error("config field '" + field + "': " + msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace ecgmoe
