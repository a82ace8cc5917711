#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sa {

// Base type for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input data violates a declared contract. Carries the path of the
// offending field when the data came from a scenario file.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
    validation_error(std::string path, const std::string& what)
        : error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// A referenced place id is not registered on the curve.
class lookup_error : public error {
public:
    explicit lookup_error(const std::string& what) : error(what) {}
};

// An operation was asked outside its mathematical domain (e.g. the index
// of an empty set of places).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A required hypothesis (Pic^0(X)/m = 0, primitive root of unity) is not
// declared by the model.
class hypothesis_error : public error {
public:
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

// The requested computation falls outside the cases the theory covers.
class unsupported_case_error : public error {
public:
    explicit unsupported_case_error(const std::string& what) : error(what) {}
};

// An enumeration would exceed its budget.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

// The declared model contradicts itself.
class model_inconsistency_error : public error {
public:
    explicit model_inconsistency_error(const std::string& what) : error(what) {}
};

// The defect is nontrivial but the finite place registry cannot exhibit a
// counterexample class.
class witness_not_found_error : public error {
public:
    explicit witness_not_found_error(const std::string& what) : error(what) {}
};

}  // namespace sa
