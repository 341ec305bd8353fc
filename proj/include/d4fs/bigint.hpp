#ifndef D4FS_BIGINT_HPP
#define D4FS_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace d4fs {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int r);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace d4fs

#endif  // D4FS_BIGINT_HPP
