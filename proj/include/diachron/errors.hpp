#pragma once

#include <stdexcept>
#include <string>

namespace diachron {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedFilename : public Error {
public:
    using Error::Error;
};

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class NonPositiveLength : public Error {
public:
    using Error::Error;
};

class EmptyHistogram : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class UndefinedRate : public Error {
public:
    using Error::Error;
};

}  // namespace diachron
