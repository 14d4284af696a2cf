#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace esc {

/// Incremental SHA-256 (OpenSSL EVP).
class Sha256 {
public:
  Sha256();
  ~Sha256();
  Sha256(Sha256 &&) noexcept;
  Sha256 &operator=(Sha256 &&) noexcept;

  void update(std::string_view bytes);
  /// Lowercase hex digest; the object must not be updated afterwards.
  std::string hex();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view bytes);

std::string sha256_file(const std::string &path);

} // namespace esc
