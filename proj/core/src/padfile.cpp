#include "qpp/padfile.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "qpp/bits.hpp"

namespace qpp {

namespace {

constexpr std::size_t kPadHeaderBytes = 12;
constexpr std::size_t kContainerHeaderBytes = 14;

std::uint64_t container_word_count(unsigned n, std::uint64_t bit_length) {
  return (bit_length + n - 1) / n;
}

std::uint64_t container_payload_bytes(unsigned n, std::uint64_t bit_length) {
  return (container_word_count(n, bit_length) * n + 7) / 8;
}

void write_bytes(std::ostream& sink, const std::uint8_t* data, std::size_t count) {
  sink.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count));
  if (!sink) {
    throw Error(Errc::io_error, "write failed after " + std::to_string(count) + " bytes");
  }
}

// Returns the bytes actually read; stops at end of stream.
std::size_t read_bytes(std::istream& source, std::uint8_t* data, std::size_t count) {
  source.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count));
  if (source.bad()) {
    throw Error(Errc::io_error, "read failed");
  }
  return static_cast<std::size_t>(source.gcount());
}

void expect_end(std::istream& source, const char* what) {
  if (source.peek() != std::char_traits<char>::eof()) {
    throw Error(Errc::length_mismatch, std::string(what) + " has trailing data past the declared length");
  }
}

} // namespace

std::uint64_t pad_file_size(unsigned n, std::uint32_t pad_length) {
  return kPadHeaderBytes + std::uint64_t{pad_length} * domain_size(n) * 2;
}

std::uint64_t write_pad(const QuantumPermutationPad& pad, std::ostream& sink) {
  if (pad.length() > 0xFFFF) {
    throw Error(Errc::too_large, "pad length " + std::to_string(pad.length()) +
                                     " does not fit the 2-byte field");
  }
  std::uint8_t header[kPadHeaderBytes] = {};
  header[0] = kPadMagic[0];
  header[1] = kPadMagic[1];
  header[2] = kPadMagic[2];
  header[3] = kPadMagic[3];
  header[4] = kFormatVersion;
  header[5] = static_cast<std::uint8_t>(pad.word_size());
  header[6] = static_cast<std::uint8_t>(pad.length() & 0xFF);
  header[7] = static_cast<std::uint8_t>((pad.length() >> 8) & 0xFF);
  header[8] = static_cast<std::uint8_t>(pad.generator());
  // header[9..11] reserved, zero
  write_bytes(sink, header, kPadHeaderBytes);

  std::vector<std::uint8_t> row;
  for (const auto& table : pad.tables()) {
    row.clear();
    row.reserve(std::size_t{table.size()} * 2);
    for (const Word w : table.mapping()) {
      row.push_back(static_cast<std::uint8_t>(w & 0xFF));
      row.push_back(static_cast<std::uint8_t>(w >> 8));
    }
    write_bytes(sink, row.data(), row.size());
  }
  return pad_file_size(pad.word_size(), pad.length());
}

QuantumPermutationPad read_pad(std::istream& source) {
  std::uint8_t header[kPadHeaderBytes];
  if (read_bytes(source, header, kPadHeaderBytes) != kPadHeaderBytes) {
    throw Error(Errc::truncated, "pad file shorter than its 12-byte header");
  }
  if (!std::equal(kPadMagic.begin(), kPadMagic.end(), header)) {
    throw Error(Errc::bad_magic, "not a pad file (magic mismatch)");
  }
  if (header[4] != kFormatVersion) {
    throw Error(Errc::bad_version, "unsupported pad file version " + std::to_string(header[4]));
  }
  const unsigned n = header[5];
  if (n < kMinWordSize || n > kMaxWordSize) {
    throw Error(Errc::corrupt_header, "pad word size " + std::to_string(n) + " outside [1, 16]");
  }
  const std::uint32_t pad_length = header[6] | (std::uint32_t{header[7]} << 8);
  if (pad_length < 1) {
    throw Error(Errc::corrupt_header, "pad length 0");
  }
  if (header[8] > static_cast<std::uint8_t>(GeneratorId::rc4_ksa)) {
    throw Error(Errc::corrupt_header, "unknown generator id " + std::to_string(header[8]));
  }
  const auto generator = static_cast<GeneratorId>(header[8]);

  const std::uint32_t size = domain_size(n);
  std::vector<PermutationTable> tables;
  tables.reserve(pad_length);
  std::vector<std::uint8_t> row(std::size_t{size} * 2);
  for (std::uint32_t t = 0; t < pad_length; ++t) {
    if (read_bytes(source, row.data(), row.size()) != row.size()) {
      throw Error(Errc::truncated, "pad file ends inside table " + std::to_string(t));
    }
    std::vector<Word> entries(size);
    for (std::uint32_t i = 0; i < size; ++i) {
      entries[i] = static_cast<Word>(row[2 * i] | (std::uint32_t{row[2 * i + 1]} << 8));
    }
    try {
      tables.push_back(PermutationTable::from_mapping(n, std::move(entries)));
    } catch (const Error& e) {
      throw Error(Errc::corrupt_table,
                  "table " + std::to_string(t) + " is not a valid permutation: " + e.what());
    }
  }
  expect_end(source, "pad file");
  return QuantumPermutationPad(n, std::move(tables), generator);
}

CiphertextContainer container_from_stream(const WordStream& stream) {
  if (stream.n < kMinWordSize || stream.n > kMaxWordSize) {
    throw Error(Errc::invalid_argument,
                "word size " + std::to_string(stream.n) + " outside [1, 16]");
  }
  if (stream.words.size() != container_word_count(stream.n, stream.original_bit_length)) {
    throw Error(Errc::length_mismatch,
                "stream declares " + std::to_string(stream.original_bit_length) +
                    " bits but holds " + std::to_string(stream.words.size()) + " words");
  }
  BitWriter writer;
  for (const Word w : stream.words) {
    if (w >= domain_size(stream.n)) {
      throw Error(Errc::value_out_of_range, "stream word " + std::to_string(w) +
                                                " does not fit " + std::to_string(stream.n) +
                                                " bits");
    }
    writer.write(w, stream.n);
  }
  CiphertextContainer container;
  container.n = stream.n;
  container.original_bit_length = stream.original_bit_length;
  container.payload = writer.take();
  return container;
}

WordStream stream_from_container(const CiphertextContainer& container) {
  if (container.n < kMinWordSize || container.n > kMaxWordSize) {
    throw Error(Errc::invalid_argument,
                "word size " + std::to_string(container.n) + " outside [1, 16]");
  }
  const std::uint64_t word_count = container_word_count(container.n, container.original_bit_length);
  const std::uint64_t expected = container_payload_bytes(container.n, container.original_bit_length);
  if (container.payload.size() != expected) {
    throw Error(Errc::length_mismatch,
                "declared bit length " + std::to_string(container.original_bit_length) +
                    " implies " + std::to_string(expected) + " payload bytes, found " +
                    std::to_string(container.payload.size()));
  }
  BitReader reader(container.payload, std::uint64_t{container.payload.size()} * 8);
  WordStream stream;
  stream.n = container.n;
  stream.original_bit_length = container.original_bit_length;
  stream.words.reserve(static_cast<std::size_t>(word_count));
  for (std::uint64_t i = 0; i < word_count; ++i) {
    stream.words.push_back(static_cast<Word>(reader.read(container.n)));
  }
  return stream;
}

std::uint64_t write_container(const CiphertextContainer& container, std::ostream& sink) {
  const std::uint64_t expected = container_payload_bytes(container.n, container.original_bit_length);
  if (container.payload.size() != expected) {
    throw Error(Errc::length_mismatch,
                "container payload is " + std::to_string(container.payload.size()) +
                    " bytes, declared lengths imply " + std::to_string(expected));
  }
  std::uint8_t header[kContainerHeaderBytes];
  header[0] = kContainerMagic[0];
  header[1] = kContainerMagic[1];
  header[2] = kContainerMagic[2];
  header[3] = kContainerMagic[3];
  header[4] = kFormatVersion;
  header[5] = static_cast<std::uint8_t>(container.n);
  for (unsigned i = 0; i < 8; ++i) {
    header[6 + i] = static_cast<std::uint8_t>((container.original_bit_length >> (8 * i)) & 0xFF);
  }
  write_bytes(sink, header, kContainerHeaderBytes);
  write_bytes(sink, container.payload.data(), container.payload.size());
  return kContainerHeaderBytes + container.payload.size();
}

CiphertextContainer read_container(std::istream& source) {
  std::uint8_t header[kContainerHeaderBytes];
  if (read_bytes(source, header, kContainerHeaderBytes) != kContainerHeaderBytes) {
    throw Error(Errc::truncated, "container shorter than its 14-byte header");
  }
  if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), header)) {
    throw Error(Errc::bad_magic, "not a ciphertext container (magic mismatch)");
  }
  if (header[4] != kFormatVersion) {
    throw Error(Errc::bad_version,
                "unsupported container version " + std::to_string(header[4]));
  }
  const unsigned n = header[5];
  if (n < kMinWordSize || n > kMaxWordSize) {
    throw Error(Errc::corrupt_header,
                "container word size " + std::to_string(n) + " outside [1, 16]");
  }
  std::uint64_t bit_length = 0;
  for (unsigned i = 0; i < 8; ++i) {
    bit_length |= std::uint64_t{header[6 + i]} << (8 * i);
  }
  CiphertextContainer container;
  container.n = n;
  container.original_bit_length = bit_length;
  const std::uint64_t expected = container_payload_bytes(n, bit_length);
  container.payload.resize(static_cast<std::size_t>(expected));
  const std::size_t got = read_bytes(source, container.payload.data(), container.payload.size());
  if (got != container.payload.size()) {
    throw Error(Errc::length_mismatch,
                "declared bit length " + std::to_string(bit_length) + " needs " +
                    std::to_string(expected) + " payload bytes, container holds " +
                    std::to_string(got));
  }
  expect_end(source, "container");
  return container;
}

} // namespace qpp
