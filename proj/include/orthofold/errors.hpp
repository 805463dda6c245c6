#pragma once

#include <stdexcept>
#include <string>

namespace orthofold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value was evaluated outside the domain of a fold map.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Paper orientation was requested exactly at a crease.
class OrientationUndefined : public Error {
 public:
  using Error::Error;
};

// Two collinear segments share more than one point.
class OverlapError : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class InvalidCreases : public Error {
 public:
  using Error::Error;
};

class NoCuts : public Error {
 public:
  NoCuts() : Error("instance has no cuts") {}
};

// Malformed document; `path` is a JSON path such as "$.paper.width".
class ParseError : public Error {
 public:
  ParseError(std::string path, std::string reason)
      : Error(path.empty() ? reason : path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace orthofold
