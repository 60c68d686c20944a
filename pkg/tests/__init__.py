# Tests for InFirma application
