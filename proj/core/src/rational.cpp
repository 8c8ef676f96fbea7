#include "jacksf/rational.hpp"

#include <cctype>

namespace jacksf {

Rat rat_from_string(const std::string& text) {
    if (text.empty())
        throw argument_error("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw argument_error("malformed rational literal: " + text);
    }
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw argument_error("malformed rational literal: " + text);
    if (value.get_den() == 0)
        throw argument_error("zero denominator in rational literal: " + text);
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

} // namespace jacksf
