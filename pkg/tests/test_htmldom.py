from seopinion.ingestion import evaluate, parse_html, parse_xpath


def texts(root, expr):
    return [" ".join(s.split()) for s in evaluate(parse_xpath(expr), root) if s.strip()]


class TestTagSoupRecovery:
    def test_unclosed_list_items(self):
        root = parse_html("<ul><li>one<li>two<li>three</ul>")
        assert texts(root, "//ul/li/text()") == ["one", "two", "three"]

    def test_unclosed_table_cells(self):
        root = parse_html("<table><tr><td>a<td>b<tr><td>c</table>")
        assert texts(root, "//table/tr/td[1]/text()") == ["a", "c"]
        assert texts(root, "//table/tr/td[2]/text()") == ["b"]

    def test_stray_end_tags_ignored(self):
        root = parse_html("<div id='x'>text</span></b></div>")
        assert texts(root, "//div[@id='x']/text()") == ["text"]

    def test_void_elements_do_not_nest(self):
        root = parse_html("<div id='x'>before<br>after</div>")
        assert texts(root, "//div[@id='x']/text()") == ["before", "after"]

    def test_entities_decoded(self):
        root = parse_html("<span id='t'>salt &amp; pepper</span>")
        assert texts(root, "//span[@id='t']/text()") == ["salt & pepper"]

    def test_script_contents_not_parsed_as_markup(self):
        html = "<script>if (a < b) { x['<div>'] = 1; }</script><p id='p'>real</p>"
        root = parse_html(html)
        assert texts(root, "//p[@id='p']/text()") == ["real"]

    def test_unquoted_attributes(self):
        root = parse_html("<div id=main><span>v</span></div>")
        assert texts(root, "//div[@id='main']/span/text()") == ["v"]

    def test_mismatched_nesting_recovers(self):
        root = parse_html("<b><i>both</b></i><em id='e'>next</em>")
        assert texts(root, "//em[@id='e']/text()") == ["next"]


class TestDocumentOrder:
    def test_extraction_preserves_page_order(self):
        rows = "".join(f"<div class='r'><span>review {i}</span></div>" for i in range(12))
        root = parse_html(f"<html><body>{rows}</body></html>")
        assert texts(root, "//div[@class='r']/span/text()") == [
            f"review {i}" for i in range(12)
        ]

    def test_descendant_axis_keeps_order_across_subtrees(self):
        html = "<div><p>a</p></div><section><p>b</p></section><div><p>c</p></div>"
        root = parse_html(html)
        assert texts(root, "//p/text()") == ["a", "b", "c"]
