#pragma once

#include "darboux/scalar.hpp"

#include <optional>
#include <string>

namespace darboux {

enum class Status { Pass, Fail, InsufficientOrder, Error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Mismatch {
    Rational exponent;
    Scalar left;
    Scalar right;
    friend bool operator==(const Mismatch& a, const Mismatch& b) {
        return a.exponent == b.exponent && a.left == b.left && a.right == b.right;
    }
};

// Outcome of one check. `order` is the series order compared against; checks
// that are not series comparisons (divisors, patterns, reductions) use 0.
struct VerificationReport {
    std::string id;
    std::string anchor;
    long order = 0;
    Status status = Status::Error;
    std::optional<Mismatch> first_mismatch;
    std::string detail;

    bool passed() const { return status == Status::Pass; }
    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.id == b.id && a.anchor == b.anchor && a.order == b.order && a.status == b.status &&
               a.first_mismatch == b.first_mismatch && a.detail == b.detail;
    }
};

inline VerificationReport make_report(std::string id, std::string anchor, bool ok, std::string detail = {}) {
    VerificationReport r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = std::move(detail);
    return r;
}

}  // namespace darboux
