#include "tcat/element.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tcat {

struct Element::Data {
    Kind kind;
    std::string label;
    std::vector<Element> parts;
};

Element::Element() {
    static const auto empty = std::make_shared<const Data>(Data{Kind::Atom, "", {}});
    data_ = empty;
}
Element::Element(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Element Element::atom(std::string name) {
    return Element(std::make_shared<const Data>(Data{Kind::Atom, std::move(name), {}}));
}

Element Element::tuple(std::vector<Element> parts) {
    return Element(std::make_shared<const Data>(Data{Kind::Tuple, "", std::move(parts)}));
}

Element Element::pair(Element first, Element second) {
    return tuple({std::move(first), std::move(second)});
}

Element Element::tag(std::string label, Element inner) {
    return Element(std::make_shared<const Data>(
        Data{Kind::Tag, std::move(label), {std::move(inner)}}));
}

Element Element::list(std::vector<Element> items) {
    return Element(std::make_shared<const Data>(Data{Kind::List, "", std::move(items)}));
}

Element::Kind Element::kind() const { return data_->kind; }
const std::string& Element::label() const { return data_->label; }
const std::vector<Element>& Element::parts() const { return data_->parts; }

const Element& Element::at(std::size_t i) const {
    if (i >= data_->parts.size()) throw std::out_of_range("Element::at");
    return data_->parts[i];
}

std::size_t Element::size() const { return data_->parts.size(); }

int Element::compare(const Element& other) const {
    if (data_ == other.data_) return 0;
    auto ka = static_cast<int>(kind()), kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    if (int c = label().compare(other.label()); c != 0) return c < 0 ? -1 : 1;
    const auto& pa = parts();
    const auto& pb = other.parts();
    const std::size_t n = std::min(pa.size(), pb.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = pa[i].compare(pb[i]); c != 0) return c;
    if (pa.size() != pb.size()) return pa.size() < pb.size() ? -1 : 1;
    return 0;
}

std::string Element::show() const {
    std::ostringstream out;
    switch (kind()) {
        case Kind::Atom:
            out << label();
            break;
        case Kind::Tag:
            out << label() << ':' << at(0).show();
            break;
        case Kind::Tuple: {
            out << '(';
            for (std::size_t i = 0; i < size(); ++i) {
                if (i) out << ',';
                out << at(i).show();
            }
            out << ')';
            break;
        }
        case Kind::List: {
            out << '[';
            for (std::size_t i = 0; i < size(); ++i) {
                if (i) out << ',';
                out << at(i).show();
            }
            out << ']';
            break;
        }
    }
    return out.str();
}

namespace {

bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' ||
           c == '*' || c == '@' || c == '.' || c == '-' || c == '+' || c == '/';
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<Element> value() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        char c = text[pos];
        if (c == '(') return sequence(')', &Element::tuple);
        if (c == '[') return sequence(']', &Element::list);
        if (!atom_char(c)) return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && atom_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            auto inner = value();
            if (!inner) return std::nullopt;
            return Element::tag(std::move(name), *std::move(inner));
        }
        return Element::atom(std::move(name));
    }

    std::optional<Element> sequence(char close, Element (*make)(std::vector<Element>)) {
        ++pos;  // opening bracket
        std::vector<Element> items;
        skip_ws();
        if (eat(close)) return make(std::move(items));
        while (true) {
            auto item = value();
            if (!item) return std::nullopt;
            items.push_back(*std::move(item));
            if (eat(close)) return make(std::move(items));
            if (!eat(',')) return std::nullopt;
        }
    }
};

}  // namespace

std::optional<Element> Element::parse(std::string_view text) {
    Parser p{text};
    auto result = p.value();
    if (!result) return std::nullopt;
    p.skip_ws();
    if (p.pos != text.size()) return std::nullopt;
    return result;
}

}  // namespace tcat
