"""Tests module - Unit tests, integration tests, and test fixtures."""