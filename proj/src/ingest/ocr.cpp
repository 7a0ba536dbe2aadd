#include "pae/ingest/ocr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::ingest {

std::string NoOcrEngine::recognize(const Raster&) {
  throw Error(ErrorCode::EngineUnavailable, "no OCR engine configured");
}

std::string MockOcrEngine::recognize(const Raster&) {
  ++calls_;
  if (fail_) throw Error(ErrorCode::EngineFailure, "mock engine configured to fail");
  return text_;
}

namespace {

std::string first_word(const std::string& command) {
  std::istringstream ss(command);
  std::string w;
  ss >> w;
  return w;
}

bool on_path(const std::string& program) {
  if (program.empty()) return false;
  if (program.find('/') != std::string::npos) return ::access(program.c_str(), X_OK) == 0;
  const char* path = std::getenv("PATH");
  if (!path) return false;
  for (const auto& dir : util::split(path, ':')) {
    if (dir.empty()) continue;
    if (::access((std::filesystem::path(dir) / program).c_str(), X_OK) == 0) return true;
  }
  return false;
}

}  // namespace

bool CommandOcrEngine::available() const { return on_path(first_word(command_)); }

std::string CommandOcrEngine::recognize(const Raster& raster) {
  if (!available()) throw Error(ErrorCode::EngineUnavailable, "OCR command not found: " + first_word(command_));
  char name[] = "/tmp/pae-ocr-XXXXXX";
  const int fd = ::mkstemp(name);
  if (fd < 0) throw Error(ErrorCode::EngineFailure, "cannot create temp file for OCR input");
  ::close(fd);
  const std::string path = name;
  {
    std::ofstream out(path, std::ios::binary);
    out << (raster.channels == 1 ? "P5\n" : "P6\n") << raster.width << ' ' << raster.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(raster.pixels.data()), static_cast<std::streamsize>(raster.pixels.size()));
  }
  const std::string cmd = command_ + " '" + path + "' 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    std::filesystem::remove(path);
    throw Error(ErrorCode::EngineFailure, "cannot start OCR command");
  }
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  const int status = ::pclose(pipe);
  std::filesystem::remove(path);
  if (status != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code == 127) throw Error(ErrorCode::EngineUnavailable, output);
    throw Error(ErrorCode::EngineFailure, "exit " + std::to_string(code) + ": " + output);
  }
  return output;
}

std::vector<TextBlock> extract_text_ocr(const Raster& raster, OcrEngine& engine, std::size_t page_index) {
  if (!engine.available()) throw Error(ErrorCode::EngineUnavailable, "OCR engine unavailable");
  const std::string text = engine.recognize(raster);
  std::vector<TextBlock> blocks;
  std::string paragraph;
  auto flush = [&] {
    auto t = util::trim(paragraph);
    if (!t.empty()) blocks.push_back(TextBlock{std::move(t), page_index, TextOrigin::Ocr, 0, 0});
    paragraph.clear();
  };
  for (const auto& line : util::split(text, '\n')) {
    if (util::trim(line).empty()) {
      flush();
    } else {
      if (!paragraph.empty()) paragraph += '\n';
      paragraph += line;
    }
  }
  flush();
  return blocks;
}

std::string DictionaryCorrector::correct(std::string_view text) {
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    auto it = fixes_.find(word);
    out += it == fixes_.end() ? word : it->second;
    word.clear();
  };
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || c == '\'' || uc >= 0x80) {
      word.push_back(c);
    } else {
      flush();
      out.push_back(c);
    }
  }
  flush();
  return out;
}

std::string correct_spelling(std::string_view text, SpellCorrector& corrector) {
  try {
    return corrector.correct(text);
  } catch (const std::exception&) {
    return std::string(text);
  }
}

void correct_ocr_blocks(std::vector<TextBlock>& blocks, SpellCorrector& corrector) {
  for (auto& b : blocks)
    if (b.origin == TextOrigin::Ocr) b.text = correct_spelling(b.text, corrector);
}

}  // namespace pae::ingest
