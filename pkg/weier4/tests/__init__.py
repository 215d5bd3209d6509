"""Test cases for the weier4 package."""
