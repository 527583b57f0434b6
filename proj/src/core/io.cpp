#include "core/io.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string_view>

namespace rhgen::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_for_write(const std::string& path) {
    File f(std::fopen(path.c_str(), "wb"));
    if (!f) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    return f;
}

/// Buffered writer over a FILE*; flushes in large chunks.
class LineWriter {
public:
    explicit LineWriter(const std::string& path) : path_(path), file_(open_for_write(path)) { buffer_.reserve(kChunk); }

    void put(std::string_view s) {
        buffer_.append(s);
        if (buffer_.size() >= kChunk) flush();
    }

    template <class T>
    void put_number(T value) {
        char tmp[32];
        const auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, value);
        put(std::string_view(tmp, static_cast<std::size_t>(end - tmp)));
    }

    void put_precise(double value) {
        char tmp[40];
        const auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, value, std::chars_format::general, 17);
        put(std::string_view(tmp, static_cast<std::size_t>(end - tmp)));
    }

    void flush() {
        if (!buffer_.empty() && std::fwrite(buffer_.data(), 1, buffer_.size(), file_.get()) != buffer_.size())
            fail(ErrorCode::Io, "write to '" + path_ + "' failed");
        buffer_.clear();
    }

    void close() {
        flush();
        if (std::fclose(file_.release()) != 0) fail(ErrorCode::Io, "closing '" + path_ + "' failed");
    }

private:
    static constexpr std::size_t kChunk = 1 << 20;
    std::string path_;
    File file_;
    std::string buffer_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) fail(ErrorCode::Io, "read from '" + path + "' failed");
    return data;
}

template <class Fn>
void for_each_line(std::string_view data, Fn&& fn) {
    std::size_t line_no = 0;
    while (!data.empty()) {
        const auto nl = data.find('\n');
        auto line = data.substr(0, nl);
        data = nl == std::string_view::npos ? std::string_view{} : data.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        fn(line, line_no);
    }
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ','; }

// Parses whitespace/comma separated fields; returns false on a malformed token.
template <class T>
bool next_field(std::string_view& line, T& out) {
    while (!line.empty() && is_separator(line.front())) line.remove_prefix(1);
    if (line.empty()) return false;
    std::size_t len = 0;
    while (len < line.size() && !is_separator(line[len])) ++len;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + len, out);
    if (ec != std::errc() || ptr != line.data() + len) return false;
    line.remove_prefix(len);
    return true;
}

bool only_separators(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return is_separator(c); });
}

} // namespace

void write_edge_list(const std::string& path, std::span<const Edge> edges, EdgeFormat format, bool canonical) {
    std::vector<Edge> sorted;
    if (canonical) {
        sorted.assign(edges.begin(), edges.end());
        std::sort(sorted.begin(), sorted.end());
        edges = sorted;
    }
    LineWriter out(path);
    const char sep = format == EdgeFormat::Csv ? ',' : ' ';
    if (format == EdgeFormat::Csv) out.put("u,v\n");
    for (const Edge& e : edges) {
        out.put_number(e.u);
        out.put(std::string_view(&sep, 1));
        out.put_number(e.v);
        out.put("\n");
    }
    out.close();
}

std::vector<Edge> read_edge_list(const std::string& path) {
    const std::string data = slurp(path);
    std::vector<Edge> edges;
    bool first = true;
    for_each_line(data, [&](std::string_view line, std::size_t line_no) {
        const bool header = first && line.find_first_of("0123456789") == std::string_view::npos;
        first = false;
        if (header) return;
        std::uint64_t a = 0, b = 0;
        if (!next_field(line, a) || !next_field(line, b) || !only_separators(line) || a > 0xffffffffULL ||
            b > 0xffffffffULL || a == b)
            fail(ErrorCode::Io, path + ":" + std::to_string(line_no) + ": malformed edge line");
        edges.push_back(make_edge(static_cast<NodeId>(a), static_cast<NodeId>(b)));
    });
    return edges;
}

void write_coordinates(const std::string& path, std::span<const PolarPoint> coords) {
    LineWriter out(path);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.put_number(i);
        out.put(" ");
        out.put_precise(coords[i].phi);
        out.put(" ");
        out.put_precise(coords[i].r);
        out.put("\n");
    }
    out.close();
}

std::vector<PolarPoint> read_coordinates(const std::string& path) {
    const std::string data = slurp(path);
    std::vector<PolarPoint> coords;
    for_each_line(data, [&](std::string_view line, std::size_t line_no) {
        std::uint64_t id = 0;
        PolarPoint p;
        if (!next_field(line, id) || !next_field(line, p.phi) || !next_field(line, p.r) || !only_separators(line) ||
            id != coords.size())
            fail(ErrorCode::Io, path + ":" + std::to_string(line_no) + ": malformed coordinate line");
        coords.push_back(p);
    });
    return coords;
}

} // namespace rhgen::io
