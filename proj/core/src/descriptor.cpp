#include "commprob/descriptor.hpp"

#include "commprob/constructions.hpp"

namespace commprob {

DescriptorError::DescriptorError(std::size_t offset, const std::string& expected,
                                 const std::string& text)
    : std::invalid_argument("descriptor parse error at byte " + std::to_string(offset) + ": expected " +
                            expected + " in \"" + text + "\""),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Limits& lim) : text_(text), lim_(lim) {}

  Group run() {
    Group g = atom();
    while (pos_ < text_.size()) {
      if (text_[pos_] == 'x') {
        ++pos_;
        Group rhs = atom();
        g = direct_product(g, rhs, lim_);
      } else if (text_[pos_] == '/') {
        ++pos_;
        if (consume('Z')) {
          g = quotient(g, center(g), nullptr, "/Z", lim_);
        } else if (consume('G')) {
          expect('\'', "' after /G");
          g = quotient(g, commutator_subgroup(g), nullptr, "/G'", lim_);
        } else {
          throw DescriptorError(pos_, "'Z' or \"G'\" after '/'", text_);
        }
      } else {
        throw DescriptorError(pos_, "'x', '/Z', \"/G'\", or end of input", text_);
      }
    }
    return g;
  }

 private:
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) throw DescriptorError(pos_, what, text_);
  }

  int integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw DescriptorError(start, "a smaller integer", text_);
      ++pos_;
    }
    if (pos_ == start) throw DescriptorError(pos_, "an integer", text_);
    return static_cast<int>(v);
  }

  Group atom() {
    if (pos_ >= text_.size()) throw DescriptorError(pos_, "'C', 'D', 'S', or 'E'", text_);
    const std::size_t start = pos_;
    try {
      return atom_unchecked();
    } catch (const DescriptorError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      // domain errors from the constructors (C0, S9, E(4,1), ...) keep the
      // atom's byte offset; resource-cap length_errors pass through unchanged
      throw DescriptorError(start, std::string("a valid atom (") + e.what() + ")", text_);
    }
  }

  Group atom_unchecked() {
    const char c = text_[pos_];
    switch (c) {
      case 'C': ++pos_; return cyclic(integer(), lim_);
      case 'D': ++pos_; return dihedral(integer(), lim_);
      case 'S': ++pos_; return symmetric(integer(), lim_);
      case 'E': {
        ++pos_;
        expect('(', "'(' after E");
        const int p = integer();
        expect(',', "',' between E arguments");
        const int n = integer();
        expect(')', "')' closing E");
        return extraspecial(p, n, lim_);
      }
      default:
        throw DescriptorError(pos_, "'C', 'D', 'S', or 'E'", text_);
    }
  }

  const std::string& text_;
  const Limits& lim_;
  std::size_t pos_ = 0;
};

}  // namespace

Group parse_descriptor(const std::string& text, const Limits& lim) {
  return Parser(text, lim).run();
}

}  // namespace commprob
