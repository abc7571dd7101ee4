#include "zetaverify/rational.hpp"

#include <ostream>

namespace zv {

BigRational BigRational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("BigRational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError("BigRational: zero denominator in '" + text + "'");
    q.canonicalize();
    return BigRational(q);
}

std::string BigRational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational abs(const BigRational& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

} // namespace zv
