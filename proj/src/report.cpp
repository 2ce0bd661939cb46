#include "darboux/report.hpp"

#include <stdexcept>

namespace darboux {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::InsufficientOrder:
            return "insufficient-order";
        case Status::Error:
            return "error";
    }
    return "error";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "insufficient-order") return Status::InsufficientOrder;
    if (s == "error") return Status::Error;
    throw std::invalid_argument("unknown status " + s);
}

}  // namespace darboux
