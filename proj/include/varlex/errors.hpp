#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varlex {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A surface string does not conform to the grammar of the requested type.
class ParseFailure : public Error {
 public:
  ParseFailure(std::string surface, std::size_t position, const std::string& expected)
      : Error("cannot parse '" + surface + "' at position " + std::to_string(position) +
              (expected.empty() ? std::string() : ": expected " + expected)),
        surface_(std::move(surface)),
        position_(position) {}

  const std::string& surface() const noexcept { return surface_; }
  // Byte offset of the first character the grammar could not account for.
  std::size_t position() const noexcept { return position_; }

 private:
  std::string surface_;
  std::size_t position_;
};

class UnknownResidue : public Error {
 public:
  explicit UnknownResidue(const std::string& name)
      : Error("unknown amino acid residue '" + name + "'") {}
};

class NoSeparator : public Error {
 public:
  explicit NoSeparator(const std::string& s)
      : Error("no substitution separator in '" + s + "'") {}
};

class FileUnreadable : public Error {
 public:
  explicit FileUnreadable(const std::string& path)
      : Error("cannot read file '" + path + "'"), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class MalformedRow : public Error {
 public:
  MalformedRow(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateKey : public Error {
 public:
  DuplicateKey(std::size_t line, const std::string& key)
      : Error("line " + std::to_string(line) + ": key '" + key +
              "' already maps to a different rsid"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OffsetMismatch : public Error {
 public:
  OffsetMismatch(const std::string& doc_id, std::size_t start, std::size_t end,
                 const std::string& what)
      : Error("document " + doc_id + " span [" + std::to_string(start) + "," +
              std::to_string(end) + "): " + what),
        doc_id_(doc_id),
        start_(start),
        end_(end) {}
  const std::string& doc_id() const noexcept { return doc_id_; }
  std::size_t start() const noexcept { return start_; }
  std::size_t end() const noexcept { return end_; }

 private:
  std::string doc_id_;
  std::size_t start_;
  std::size_t end_;
};

}  // namespace varlex
