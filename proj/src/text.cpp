#include "subseq/text.hpp"

#include "subseq/errors.hpp"

namespace subseq {

Text text_from_bytes(std::string_view bytes) {
    Text out;
    out.reserve(bytes.size());
    for (const char c : bytes) out.push_back(static_cast<unsigned char>(c));
    return out;
}

Text text_from_utf8(std::string_view utf8) {
    Text out;
    std::size_t i = 0;
    while (i < utf8.size()) {
        const auto lead = static_cast<unsigned char>(utf8[i]);
        std::size_t extra = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07;
        } else {
            throw ParameterError("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + extra >= utf8.size()) {
            throw ParameterError("truncated UTF-8 sequence at offset " + std::to_string(i));
        }
        for (std::size_t j = 1; j <= extra; ++j) {
            const auto cont = static_cast<unsigned char>(utf8[i + j]);
            if ((cont & 0xC0) != 0x80) {
                throw ParameterError("invalid UTF-8 continuation byte at offset " +
                                     std::to_string(i + j));
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
        if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw ParameterError("invalid UTF-8 code point at offset " + std::to_string(i));
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string utf8_encode(Symbol cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string utf8_encode(TextView text) {
    std::string out;
    out.reserve(text.size());
    for (const Symbol cp : text) out += utf8_encode(cp);
    return out;
}

}  // namespace subseq
