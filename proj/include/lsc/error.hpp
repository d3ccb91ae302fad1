#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lsc {

// Base for every error the library reports. Callers that only need a message
// catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSegment : public Error {
public:
    explicit DegenerateSegment(int id)
        : Error("segment " + std::to_string(id) + " has identical endpoints"), id(id) {}
    int id;
};

class DuplicateSegment : public Error {
public:
    DuplicateSegment(int i, int j)
        : Error("segments " + std::to_string(i) + " and " + std::to_string(j) + " are identical"),
          first(i), second(j) {}
    int first, second;
};

class OverlapViolation : public Error {
public:
    OverlapViolation(int i, int j)
        : Error("segments " + std::to_string(i) + " and " + std::to_string(j) +
                " overlap in more than one point"),
          first(i), second(j) {}
    int first, second;
};

class GeneralPositionViolation : public Error {
public:
    GeneralPositionViolation(std::string point, std::vector<int> ids)
        : Error(make_message(point, ids)), point(std::move(point)), segments(std::move(ids)) {}
    std::string point;
    std::vector<int> segments;

private:
    static std::string make_message(const std::string& p, const std::vector<int>& ids) {
        std::string m = "point " + p + " lies on " + std::to_string(ids.size()) + " segments:";
        for (int id : ids) m += " " + std::to_string(id);
        return m;
    }
};

class UnknownSegment : public Error {
public:
    explicit UnknownSegment(int id) : Error("unknown segment id " + std::to_string(id)), id(id) {}
    int id;
};

class NotAxisParallel : public Error {
public:
    explicit NotAxisParallel(int id)
        : Error("segment " + std::to_string(id) + " is neither horizontal nor vertical"), id(id) {}
    int id;
};

class TooFewSegments : public Error {
public:
    TooFewSegments(int have, int need)
        : Error("need at least " + std::to_string(need) + " segments, have " + std::to_string(have)) {}
};

// A target cell has no allowed segment on its boundary, so no cover exists.
class Infeasible : public Error {
public:
    explicit Infeasible(int cell)
        : Error("cell " + std::to_string(cell) + " has no allowed covering segment"), cell(cell) {}
    int cell;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(int ub)
        : Error("no cover of size at most " + std::to_string(ub)), bound(ub) {}
    int bound;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class DegreeViolation : public Error {
public:
    DegreeViolation(int vertex, int degree)
        : Error("vertex " + std::to_string(vertex) + " has degree " + std::to_string(degree) +
                " (max 3)"),
          vertex(vertex) {}
    int vertex;
};

class InfeasibleCover : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

}  // namespace lsc
