#ifndef MCX_ERROR_HPP
#define MCX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcx {

// Thrown when an operation receives input outside its documented domain
// (loops, out-of-range vertices, non-face arguments, malformed files).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcx

#endif // MCX_ERROR_HPP
