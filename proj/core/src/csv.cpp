#include "transit/csv.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "transit/errors.hpp"

namespace transit {

std::optional<std::size_t> CsvTable::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CsvTable::column(std::string_view name) const {
  if (auto c = find_column(name)) return *c;
  throw InputError(ErrorKind::MissingColumn, source, header.empty() ? 0 : 1,
                   "missing column '" + std::string(name) + "'");
}

namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

class Reader {
 public:
  Reader(std::string_view text, const std::string& source) : text_(text), source_(source) {
    if (text_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
  }

  // False at end of input.
  bool next(Record& rec) {
    while (pos_ < text_.size()) {
      rec.fields.clear();
      rec.line = line_;
      if (at_line_end()) {  // blank line
        consume_line_end();
        continue;
      }
      read_record(rec);
      return true;
    }
    return false;
  }

 private:
  bool at_line_end() const {
    return text_[pos_] == '\n' || (text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n');
  }

  void consume_line_end() {
    if (text_[pos_] == '\r') ++pos_;
    ++pos_;
    ++line_;
  }

  void read_record(Record& rec) {
    for (;;) {
      rec.fields.push_back(read_field());
      if (pos_ >= text_.size()) return;
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (at_line_end()) {
        consume_line_end();
        return;
      }
      if (text_[pos_] == '\r' && pos_ + 1 == text_.size()) {
        ++pos_;
        return;
      }
      throw InputError(ErrorKind::BadValue, source_, line_, "unexpected character after quoted field");
    }
  }

  std::string read_field() {
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const auto start_line = line_;
      ++pos_;
      for (;;) {
        if (pos_ >= text_.size()) {
          throw InputError(ErrorKind::BadValue, source_, start_line, "unterminated quoted field");
        }
        const char c = text_[pos_++];
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            out.push_back('"');
            ++pos_;
            continue;
          }
          return out;
        }
        if (c == '\n') ++line_;
        out.push_back(c);
      }
    }
    while (pos_ < text_.size() && text_[pos_] != ',' && !at_line_end()) {
      out.push_back(text_[pos_++]);
    }
    // A lone trailing CR at end of input is a line ending, not data.
    if (pos_ == text_.size() && !out.empty() && out.back() == '\r') out.pop_back();
    return out;
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

CsvTable read_csv(std::istream& in, std::string source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  CsvTable t;
  t.source = std::move(source);
  Reader reader(text, t.source);
  Record rec;
  if (!reader.next(rec)) {
    throw InputError(ErrorKind::MissingColumn, t.source, 0, "no header row");
  }
  t.header = std::move(rec.fields);
  while (reader.next(rec)) {
    if (rec.fields.size() != t.header.size()) {
      throw InputError(ErrorKind::BadValue, t.source, rec.line,
                       "expected " + std::to_string(t.header.size()) + " fields, found " +
                           std::to_string(rec.fields.size()));
    }
    t.rows.push_back(std::move(rec.fields));
    t.lines.push_back(rec.line);
  }
  return t;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorKind::Io, path.string(), 0, "cannot open file");
  return read_csv(in, path.string());
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace transit
