#include "hrpb/io.hpp"

#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "hrpb/error.hpp"

namespace hrpb::io {

namespace {

static_assert(std::endian::native == std::endian::little,
              "byte-order conversion for big-endian hosts is not implemented");

[[noreturn]] void throw_io(const std::filesystem::path& path,
                           const char* action) {
  throw IoError(std::string("cannot ") + action + " '" + path.string() + "'" +
                (errno != 0 ? std::string(": ") + std::strerror(errno) : ""));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io(path, "open");
  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
  if (size > 0 &&
      !in.read(reinterpret_cast<char*>(bytes.data()), size)) {
    throw_io(path, "read");
  }
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_io(path, "open");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw_io(path, "write");
}

// Little-endian scalar access into a byte buffer.
template <typename T>
T load_le(const std::uint8_t* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

template <typename T>
void append_le(std::vector<std::uint8_t>& out, T v) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
  out.insert(out.end(), p, p + sizeof(T));
}

// Splits a text file into (line, byte offset) pairs, dropping blank lines
// and '#' comments.
struct TextLine {
  std::string text;
  std::uint64_t offset;
  std::size_t number;  // 1-based
};

std::vector<TextLine> read_text_lines(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  std::vector<TextLine> lines;
  std::size_t start = 0;
  std::size_t line_number = 0;
  while (start <= bytes.size()) {
    std::size_t end = start;
    while (end < bytes.size() && bytes[end] != '\n') ++end;
    ++line_number;
    std::string text(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                     bytes.begin() + static_cast<std::ptrdiff_t>(end));
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const bool blank = text.find_first_not_of(" \t") == std::string::npos;
    if (!blank && text[text.find_first_not_of(" \t")] != '#') {
      lines.push_back(TextLine{std::move(text), start, line_number});
    }
    if (end == bytes.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::vector<FloatEmbedding> read_fvecs(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  std::vector<FloatEmbedding> out;
  std::size_t cursor = 0;
  std::uint32_t dim = 0;

  while (cursor < bytes.size()) {
    if (bytes.size() - cursor < 4) {
      throw ParseError("truncated record length prefix", cursor);
    }
    const std::uint32_t d = load_le<std::uint32_t>(bytes.data() + cursor);
    if (d == 0) {
      throw ParseError("record dimension is zero", cursor);
    }
    if (!out.empty() && d != dim) {
      throw ParseError("record dimension " + std::to_string(d) +
                           " differs from preceding dimension " +
                           std::to_string(dim),
                       cursor);
    }
    dim = d;
    cursor += 4;
    const std::size_t payload = static_cast<std::size_t>(d) * 4;
    if (bytes.size() - cursor < payload) {
      throw ParseError("truncated record payload", bytes.size());
    }
    std::vector<float> values(d);
    std::memcpy(values.data(), bytes.data() + cursor, payload);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (!std::isfinite(values[i])) {
        throw CorruptionError("non-finite value in record " +
                              std::to_string(out.size()));
      }
    }
    out.emplace_back(std::move(values));
    cursor += payload;
  }
  return out;
}

std::uint64_t write_fvecs(const std::filesystem::path& path,
                          std::span<const FloatEmbedding> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i].dim() != xs[0].dim()) {
      throw ShapeError("embedding " + std::to_string(i) + " has dimension " +
                       std::to_string(xs[i].dim()) + ", expected " +
                       std::to_string(xs[0].dim()));
    }
  }
  std::vector<std::uint8_t> bytes;
  if (!xs.empty()) {
    bytes.reserve(xs.size() * (4 + xs[0].dim() * std::size_t{4}));
  }
  for (const FloatEmbedding& x : xs) {
    append_le(bytes, x.dim());
    for (std::uint32_t i = 0; i < x.dim(); ++i) append_le(bytes, x[i]);
  }
  write_file(path, bytes);
  return bytes.size();
}

std::vector<FloatEmbedding> read_vectors_text(
    const std::filesystem::path& path) {
  std::vector<FloatEmbedding> out;
  for (const TextLine& line : read_text_lines(path)) {
    std::vector<float> values;
    const char* p = line.text.c_str();
    const char* end = p + line.text.size();
    while (p < end) {
      char* next = nullptr;
      errno = 0;
      const float v = std::strtof(p, &next);
      if (next == p) {
        throw ParseError("unparseable value on line " +
                             std::to_string(line.number),
                         line.offset);
      }
      values.push_back(v);
      p = next;
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
    }
    if (values.empty()) continue;
    try {
      out.emplace_back(std::move(values));
    } catch (const InvalidArgumentError& e) {
      throw CorruptionError("line " + std::to_string(line.number) + ": " +
                            e.what());
    }
  }
  return out;
}

std::vector<FloatEmbedding> read_vectors(const std::filesystem::path& path) {
  return path.extension() == ".fvecs" ? read_fvecs(path)
                                      : read_vectors_text(path);
}

std::vector<double> read_scalars_text(const std::filesystem::path& path) {
  std::vector<double> out;
  for (const TextLine& line : read_text_lines(path)) {
    char* next = nullptr;
    const double v = std::strtod(line.text.c_str(), &next);
    if (next == line.text.c_str()) {
      throw ParseError("unparseable value on line " +
                           std::to_string(line.number),
                       line.offset);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int32_t> read_labels_text(const std::filesystem::path& path) {
  std::vector<std::int32_t> out;
  for (const TextLine& line : read_text_lines(path)) {
    char* next = nullptr;
    const long v = std::strtol(line.text.c_str(), &next, 10);
    if (next == line.text.c_str()) {
      throw ParseError("unparseable label on line " +
                           std::to_string(line.number),
                       line.offset);
    }
    out.push_back(static_cast<std::int32_t>(v));
  }
  return out;
}

void write_hrpb(const std::filesystem::path& path, const BinaryStore& store) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(kHrpbHeaderSize + store.payload().size());
  bytes.insert(bytes.end(), {'H', 'R', 'P', 'B'});
  append_le(bytes, kHrpbVersion);
  bytes.push_back(static_cast<std::uint8_t>(store.config().method));
  append_le(bytes, store.config().source_dim);
  append_le(bytes, store.config().target_bits);
  append_le(bytes, store.config().seed);
  append_le(bytes, static_cast<std::uint64_t>(store.size()));
  bytes.insert(bytes.end(), store.payload().begin(), store.payload().end());
  write_file(path, bytes);
}

BinaryStore read_hrpb(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (bytes.size() < kHrpbHeaderSize) {
    throw ParseError("truncated header", bytes.size());
  }
  if (std::memcmp(bytes.data(), "HRPB", 4) != 0) {
    throw FormatError("bad magic; not an HRPB file");
  }
  const auto version = load_le<std::uint16_t>(bytes.data() + 4);
  if (version != kHrpbVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  const std::uint8_t method = bytes[6];
  if (method > 1) {
    throw FormatError("unknown method tag " + std::to_string(method));
  }

  CompressionConfig config;
  config.method = static_cast<Method>(method);
  config.source_dim = load_le<std::uint32_t>(bytes.data() + 7);
  config.target_bits = load_le<std::uint32_t>(bytes.data() + 11);
  config.seed = load_le<std::uint64_t>(bytes.data() + 15);
  const auto count = load_le<std::uint64_t>(bytes.data() + 23);
  try {
    config.validate();
  } catch (const InvalidArgumentError& e) {
    throw CorruptionError(std::string("invalid header: ") + e.what());
  }

  const std::uint64_t code_bytes = packed_size(config.target_bits);
  const std::uint64_t expected = count * code_bytes;
  const std::uint64_t available = bytes.size() - kHrpbHeaderSize;
  if (available < expected) {
    throw ParseError("payload holds " + std::to_string(available) +
                         " bytes, header promises " + std::to_string(expected),
                     bytes.size());
  }
  if (available > expected) {
    throw ParseError("trailing data after payload",
                     kHrpbHeaderSize + expected);
  }

  std::vector<std::uint8_t> payload(bytes.begin() + kHrpbHeaderSize,
                                    bytes.end());
  return BinaryStore(config, std::move(payload), count);
}

}  // namespace hrpb::io
