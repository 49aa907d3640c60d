"""
Tests for configuration helpers.
"""

import pytest

from nonvanishing.utils import (
    get_default_config,
    load_config,
    load_config_file,
    merge_configs,
    validate_config,
)


class TestDefaults:
    """Test default configuration."""

    def test_values(self):
        """Acceptance bounds and rendering defaults."""
        config = get_default_config()
        assert config['max_k'] == 100
        assert config['max_thickening_k'] == 200
        assert config['refutation_k'] == 2
        assert config['beyond_range'] is False
        assert config['html_style'] == 'monokai'

    def test_fresh_copy(self):
        """Callers may mutate the result."""
        get_default_config()['max_k'] = 1
        assert get_default_config()['max_k'] == 100


class TestValidateConfig:
    """Test sanitising of user values."""

    @pytest.mark.parametrize("key, bad", [
        ('max_k', 0),
        ('max_k', 'ten'),
        ('max_thickening_k', True),
        ('refutation_k', 1),
        ('beyond_range', 'yes'),
        ('html_style', 3),
    ])
    def test_bad_values_fall_back(self, key, bad):
        config = dict(get_default_config(), **{key: bad})
        assert validate_config(config)[key] == get_default_config()[key]

    def test_good_values_kept(self):
        config = dict(get_default_config(), max_k=12, refutation_k=5, beyond_range=True)
        validated = validate_config(config)
        assert (validated['max_k'], validated['refutation_k'], validated['beyond_range']) == (12, 5, True)


class TestMerge:
    """Test merging of user values over defaults."""

    def test_none_values_ignored(self):
        merged = merge_configs(get_default_config(), {'max_k': None, 'refutation_k': 4})
        assert merged['max_k'] == 100
        assert merged['refutation_k'] == 4

    def test_no_user_config(self):
        assert merge_configs(get_default_config(), None) == get_default_config()


class TestLoadConfig:
    """Test YAML loading."""

    def test_explicit_file(self, tmp_path):
        path = tmp_path / "config.yml"
        path.write_text("max_k: 20\nbeyond_range: true\n", encoding="utf-8")
        config = load_config(path)
        assert config['max_k'] == 20
        assert config['beyond_range'] is True
        assert config['refutation_k'] == 2

    def test_default_file(self, tmp_path, monkeypatch):
        (tmp_path / "nonvanishing.yml").write_text("max_thickening_k: 7\n", encoding="utf-8")
        monkeypatch.chdir(tmp_path)
        assert load_config()['max_thickening_k'] == 7

    def test_no_file(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert load_config() == get_default_config()

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yml"
        path.write_text("", encoding="utf-8")
        assert load_config_file(path) == {}

    def test_unknown_key_warns(self, tmp_path):
        path = tmp_path / "config.yml"
        path.write_text("max_k: 5\nplot_style: dark\n", encoding="utf-8")
        with pytest.warns(UserWarning, match="plot_style"):
            data = load_config_file(path)
        assert data == {'max_k': 5}

    def test_non_mapping_warns(self, tmp_path):
        path = tmp_path / "config.yml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.warns(UserWarning, match="expected a mapping"):
            assert load_config_file(path) == {}
