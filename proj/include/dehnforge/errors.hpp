#ifndef DEHNFORGE_ERRORS_HPP
#define DEHNFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dehnforge {

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAlternating : PreconditionViolated {
    NotAlternating() : PreconditionViolated("word is not alternating") {}
};

struct NotBalanced : PreconditionViolated {
    NotBalanced() : PreconditionViolated("word is not balanced") {}
};

struct MarkNotPreferred : PreconditionViolated {
    explicit MarkNotPreferred(const std::string& what) : PreconditionViolated(what) {}
};

struct NotNullHomotopic : PreconditionViolated {
    NotNullHomotopic() : PreconditionViolated("word does not represent the identity") {}
};

struct KOutOfRange : PreconditionViolated {
    explicit KOutOfRange(const std::string& what) : PreconditionViolated(what) {}
};

struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& name)
        : std::invalid_argument("unknown word family: " + name) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct CapTooLarge : std::invalid_argument {
    explicit CapTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Extra per-iteration invariant checking inside the rewriting algorithms.
// Off by default; the test suites switch it on for small inputs.
inline bool& heavy_checks() {
    static bool on = false;
    return on;
}

}  // namespace dehnforge

#endif  // DEHNFORGE_ERRORS_HPP
