#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pae/ingest/document.hpp"
#include "pae/ingest/raster.hpp"

namespace pae::ingest {

class OcrEngine {
 public:
  virtual ~OcrEngine() = default;
  virtual bool available() const { return true; }
  // Engines that are not re-entrant return false; the pipeline then
  // serializes calls into them.
  virtual bool concurrent() const { return true; }
  // Throws Error(EngineFailure) with the engine's diagnostics.
  virtual std::string recognize(const Raster& raster) = 0;
};

// Always reports EngineUnavailable. The default when no engine is configured.
class NoOcrEngine final : public OcrEngine {
 public:
  bool available() const override { return false; }
  std::string recognize(const Raster&) override;
};

class MockOcrEngine final : public OcrEngine {
 public:
  explicit MockOcrEngine(std::string text, bool fail = false) : text_(std::move(text)), fail_(fail) {}
  std::string recognize(const Raster&) override;
  int calls() const { return calls_; }

 private:
  std::string text_;
  bool fail_;
  int calls_ = 0;
};

// Writes the raster as a binary PGM/PPM to a temp file and runs
// `<command> <file>`; stdout is the recognized text.
class CommandOcrEngine final : public OcrEngine {
 public:
  explicit CommandOcrEngine(std::string command) : command_(std::move(command)) {}
  bool available() const override;
  std::string recognize(const Raster& raster) override;

 private:
  std::string command_;
};

// Splits recognized text into paragraphs (blank-line separated); each
// non-empty paragraph becomes one TextBlock with origin Ocr.
std::vector<TextBlock> extract_text_ocr(const Raster& raster, OcrEngine& engine, std::size_t page_index = 0);

class SpellCorrector {
 public:
  virtual ~SpellCorrector() = default;
  virtual bool concurrent() const { return true; }
  virtual std::string correct(std::string_view text) = 0;
};

class IdentityCorrector final : public SpellCorrector {
 public:
  std::string correct(std::string_view text) override { return std::string(text); }
};

// Replaces whole words found in the dictionary (case-sensitive key match).
class DictionaryCorrector final : public SpellCorrector {
 public:
  explicit DictionaryCorrector(std::map<std::string, std::string> fixes) : fixes_(std::move(fixes)) {}
  std::string correct(std::string_view text) override;

 private:
  std::map<std::string, std::string> fixes_;
};

// Corrector exceptions degrade to the identity.
std::string correct_spelling(std::string_view text, SpellCorrector& corrector);

// Applies the corrector to OCR-origin blocks only.
void correct_ocr_blocks(std::vector<TextBlock>& blocks, SpellCorrector& corrector);

}  // namespace pae::ingest
