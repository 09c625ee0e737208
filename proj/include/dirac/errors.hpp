#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirac {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got, const std::string& where)
        : Error(where + ": expected dimension " + std::to_string(expected) + ", got " +
                std::to_string(got)),
          expected(expected), got(got)
    {
    }
    std::size_t expected;
    std::size_t got;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// c[i][j][.] != -c[j][i][.] (0-based indices).
class AntisymmetryViolation : public Error {
public:
    AntisymmetryViolation(std::size_t i, std::size_t j, const std::string& what)
        : Error(what + ": antisymmetry violated at (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ")"),
          i(i), j(j)
    {
    }
    std::size_t i;
    std::size_t j;
};

class NotMaximalIsotropic : public Error {
public:
    using Error::Error;
};

class NotSubalgebra : public Error {
public:
    using Error::Error;
};

class PNotInE : public Error {
public:
    using Error::Error;
};

class NonzeroRealIndex : public Error {
public:
    explicit NonzeroRealIndex(std::size_t r)
        : Error("construct_J: real index is " + std::to_string(r) + ", expected 0"), index(r)
    {
    }
    std::size_t index;
};

class NonRealOutput : public Error {
public:
    using Error::Error;
};

class PMismatch : public Error {
public:
    using Error::Error;
};

class InvalidModel : public Error {
public:
    using Error::Error;
};

}  // namespace dirac
