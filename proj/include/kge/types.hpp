#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kge {

struct Triple {
    std::uint32_t head = 0;
    std::uint32_t rel = 0;
    std::uint32_t tail = 0;

    bool operator==(const Triple&) const = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
        // splitmix-style mix of the three ids
        std::uint64_t x = (std::uint64_t(t.head) << 42) ^ (std::uint64_t(t.rel) << 21) ^ t.tail;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

enum class Direction { Head, Tail };

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed input file
class ParseError : public Error {
public:
    using Error::Error;
};

// label not present in a fixed vocabulary
class VocabError : public Error {
public:
    using Error::Error;
};

// inconsistent configuration (dimension mismatch, bad worker count, ...)
class ConfigError : public Error {
public:
    using Error::Error;
};

// missing/corrupt data or checkpoint
class DataError : public Error {
public:
    using Error::Error;
};

// no valid negative can be drawn
class SamplingError : public Error {
public:
    using Error::Error;
};

// operation invalid in the current state (e.g. observe after stop)
class StateError : public Error {
public:
    using Error::Error;
};

}  // namespace kge
